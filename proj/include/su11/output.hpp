/**
 * Copyright 2026 The su11 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "su11/sweep.hpp"

namespace su11 {

/// One evaluated curve: the spec that produced it and its rows.
struct SeriesResult {
  std::string name;
  SweepSpec spec;
  std::vector<SweepRow> rows;
};

/// Provenance written ahead of the data: tool version, invoking command and
/// the physical conventions in force.
struct OutputHeader {
  std::string command;
  std::vector<std::pair<std::string, std::string>> extra;
};

std::string tool_version();

/// Physical conventions recorded in every output header.
std::vector<std::pair<std::string, std::string>> conventions(const SweepSpec& spec);

/// Column names of the table written for `series`. A `series` and `axis`
/// column lead when more than one series or axis is present.
std::vector<std::string> csv_columns(const std::vector<SeriesResult>& series);

/// RFC-4180 field quoting.
std::string csv_field(const std::string& text);

/// CSV with a `#` comment header carrying the full config of each series.
void write_csv(std::ostream& os, const OutputHeader& header, const std::vector<SeriesResult>& series);

/// JSON mirror of write_csv; row objects use the CSV column names.
void write_json(std::ostream& os, const OutputHeader& header, const std::vector<SeriesResult>& series);

/// True when any row of any series carries an error.
bool has_errors(const std::vector<SeriesResult>& series);

}  // namespace su11
