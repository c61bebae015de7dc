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

#include "su11/figures.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "su11/config_io.hpp"

namespace su11 {

namespace {

constexpr std::array<std::pair<Figure, std::string_view>, 6> kFigureNames{{
    {Figure::Fig2a, "fig2a"},
    {Figure::Fig2b, "fig2b"},
    {Figure::Fig3a, "fig3a"},
    {Figure::Fig3b, "fig3b"},
    {Figure::Fig4a, "fig4a"},
    {Figure::Fig4b, "fig4b"},
}};

constexpr double kBalancedGain = 0.1;
constexpr double kGain1Unbalanced = 0.45;
constexpr double kGain2Unbalanced = 0.2;
constexpr BaseTransmission kInitialTransmission{0.52, 0.42};

SweepSpec loss_sweep(Axis axis, double n_i, std::vector<Metric> metrics, const FigureOptions& opts) {
  SweepSpec s;
  s.axis = axis;
  s.lo = 0.01;
  s.hi = 1.0;
  s.steps = opts.steps;
  s.fixed = {.g1 = kBalancedGain, .g2 = kBalancedGain, .n_i = n_i};
  s.metrics = std::move(metrics);
  s.snl_convention = opts.snl_convention;
  return s;
}

std::vector<FigureSeries> loss_family(double n_i, std::vector<Metric> metrics, const FigureOptions& opts,
                                      const std::string& suffix) {
  return {
      {"signal_loss" + suffix, loss_sweep(Axis::SignalT2, n_i, metrics, opts)},
      {"idler_loss" + suffix, loss_sweep(Axis::IdlerT2, n_i, metrics, opts)},
      {"symmetric_loss" + suffix, loss_sweep(Axis::BothT2, n_i, metrics, opts)},
  };
}

std::vector<FigureSeries> unbalanced_family(Axis axis, const FigureOptions& opts) {
  std::vector<FigureSeries> out;
  for (const auto& [name, n_i] : {std::pair{"spontaneous", 0.0}, std::pair{"stimulated", 1e4}}) {
    SweepSpec s;
    s.axis = axis;
    s.steps = opts.steps;
    s.fixed = {.g1 = kGain1Unbalanced, .g2 = kGain2Unbalanced, .n_i = n_i};
    s.metrics = {Metric::Visibility};
    s.base = kInitialTransmission;
    s.axis_total = opts.axis_total;
    s.snl_convention = opts.snl_convention;
    s.lo = 0.01;
    s.hi = opts.axis_total ? (axis == Axis::SignalT2 ? kInitialTransmission.ts2 : kInitialTransmission.ti2) : 1.0;
    out.push_back({name, s});
  }
  return out;
}

}  // namespace

std::string to_string(Figure fig) {
  for (const auto& [f, name] : kFigureNames)
    if (f == fig) return std::string(name);
  return "?";
}

Figure parse_figure(std::string_view text) {
  for (const auto& [f, name] : kFigureNames)
    if (name == text) return f;
  throw DomainError("unknown figure '" + std::string(text) + "'");
}

const std::vector<Figure>& all_figures() {
  static const std::vector<Figure> figs{Figure::Fig2a, Figure::Fig2b, Figure::Fig3a,
                                        Figure::Fig3b, Figure::Fig4a, Figure::Fig4b};
  return figs;
}

std::vector<FigureSeries> figure_series(Figure fig, const FigureOptions& opts) {
  const std::vector<Metric> vis{Metric::Visibility};
  const std::vector<Metric> sens{Metric::Dtheta2, Metric::DbVsShotnoise};
  switch (fig) {
    case Figure::Fig2a: return loss_family(0.0, vis, opts, "");
    case Figure::Fig2b: {
      auto out = loss_family(50.0, vis, opts, "_n50");
      for (auto& s : loss_family(1e4, vis, opts, "_n1e4")) out.push_back(std::move(s));
      return out;
    }
    case Figure::Fig3a: return loss_family(0.0, sens, opts, "");
    case Figure::Fig3b: return loss_family(50.0, sens, opts, "");
    case Figure::Fig4a: return unbalanced_family(Axis::SignalT2, opts);
    case Figure::Fig4b: return unbalanced_family(Axis::IdlerT2, opts);
  }
  return {};
}

std::vector<SeriesResult> run_figure(Figure fig, const FigureOptions& opts, int threads) {
  std::vector<SeriesResult> out;
  for (auto& s : figure_series(fig, opts)) {
    auto rows = run_sweep(s.spec, threads);
    out.push_back({std::move(s.name), std::move(s.spec), std::move(rows)});
  }
  return out;
}

std::string plot_script(Figure fig, const std::vector<SeriesResult>& series, const std::string& csv_name) {
  const auto cols = csv_columns(series);
  std::ostringstream gp;
  gp << "# gnuplot script for " << csv_name << '\n';
  gp << "set datafile separator ','\n";
  gp << "set key autotitle columnhead\n";
  gp << "set key outside\n";
  gp << "set xlabel 'transmission t^2'\n";
  gp << "set grid\n";
  gp << "set terminal pngcairo size 900,600\n";
  gp << "set output '" << to_string(fig) << ".png'\n";
  const std::size_t first_metric = 3;
  const std::size_t n_metrics = series.empty() ? 0 : series.front().spec.metrics.size();
  if (n_metrics > 1) gp << "set multiplot layout " << n_metrics << ",1\n";
  for (std::size_t m = 0; m < n_metrics; ++m) {
    const std::size_t col = first_metric + m + 1;
    gp << "set ylabel '" << cols[first_metric + m] << "'\n";
    gp << "plot ";
    for (std::size_t k = 0; k < series.size(); ++k) {
      gp << (k ? ", \\\n     " : "") << "'" << csv_name << "' using 3:(strcol(1) eq '" << series[k].name
         << "' ? $" << col << " : NaN) with lines title '" << series[k].name << "'";
    }
    gp << '\n';
  }
  if (n_metrics > 1) gp << "unset multiplot\n";
  return gp.str();
}

}  // namespace su11
