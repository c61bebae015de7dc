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

#include <string>
#include <string_view>
#include <vector>

#include "su11/output.hpp"
#include "su11/sweep.hpp"

namespace su11 {

enum class Figure { Fig2a, Fig2b, Fig3a, Fig3b, Fig4a, Fig4b };

std::string to_string(Figure fig);
Figure parse_figure(std::string_view text);
const std::vector<Figure>& all_figures();

/// A named curve of a figure and the sweep that produces it.
struct FigureSeries {
  std::string name;
  SweepSpec spec;
};

struct FigureOptions {
  bool axis_total = false;
  metrics::ShotNoiseConvention snl_convention = metrics::ShotNoiseConvention::AfterOpa1;
  int steps = 100;
};

/// Preconfigured sweeps of one figure, one entry per curve.
std::vector<FigureSeries> figure_series(Figure fig, const FigureOptions& opts = {});

/// Evaluates every curve of the figure.
std::vector<SeriesResult> run_figure(Figure fig, const FigureOptions& opts = {}, int threads = 0);

/// gnuplot script that plots `csv_name` as written by write_csv.
std::string plot_script(Figure fig, const std::vector<SeriesResult>& series, const std::string& csv_name);

}  // namespace su11
