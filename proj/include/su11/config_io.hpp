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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "su11/sweep.hpp"

namespace su11 {

/// Malformed config text or an unknown key.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Every key understood by the config format, in serialization order.
const std::vector<std::string>& config_keys();

/// Sets one key from its textual value. Transmission keys (ts2, ti2,
/// base_ts2, base_ti2) take power transmissions. Throws ConfigError.
void apply_setting(SweepSpec& spec, std::string_view key, std::string_view value);

/// Parses flat `key = value` text. Blank lines and `#` comments are ignored;
/// later keys override earlier ones. Unset keys keep SweepSpec defaults.
SweepSpec parse_config(std::string_view text);
SweepSpec load_config(const std::string& path);

/// Writes every key so that parse_config(serialize_config(s)) == s.
std::string serialize_config(const SweepSpec& spec);

/// Value of one key as serialize_config would print it.
std::string setting_value(const SweepSpec& spec, std::string_view key);

/// Shortest text that parses back to exactly `v`.
std::string format_number(double v);
double parse_number(std::string_view text);

}  // namespace su11
