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

#include "su11/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <utility>

#include "parallel.hpp"

namespace su11 {

namespace {

constexpr std::array<std::pair<Axis, std::string_view>, 7> kAxisNames{{
    {Axis::SignalT2, "t_s2"},
    {Axis::IdlerT2, "t_i2"},
    {Axis::BothT2, "t_both2"},
    {Axis::Theta, "theta"},
    {Axis::SeedPhotons, "n_i"},
    {Axis::Gain1, "G1"},
    {Axis::Gain2, "G2"},
}};

constexpr std::array<std::pair<Metric, std::string_view>, 4> kMetricNames{{
    {Metric::Mean, "mean"},
    {Metric::Visibility, "visibility"},
    {Metric::Dtheta2, "dtheta2"},
    {Metric::DbVsShotnoise, "db_vs_shotnoise"},
}};

bool is_transmission_axis(Axis a) {
  return a == Axis::SignalT2 || a == Axis::IdlerT2 || a == Axis::BothT2;
}

void check_axis_value(Axis axis, double v) {
  if (!std::isfinite(v)) throw DomainError("sweep bounds must be finite");
  if (is_transmission_axis(axis) && !(v >= 0.0 && v <= 1.0)) {
    throw DomainError(to_string(axis) + " must lie in [0,1]");
  }
  if ((axis == Axis::SeedPhotons || axis == Axis::Gain1 || axis == Axis::Gain2) && v < 0.0) {
    throw DomainError(to_string(axis) + " must be >= 0");
  }
}

// Evaluates every requested metric at one point; failures are recorded, not thrown.
SweepRow evaluate(const SweepSpec& spec, double x) {
  SweepRow row;
  row.x = x;
  row.values.resize(spec.metrics.size());
  auto fail = [&row](Metric m, const std::exception& e) {
    if (!row.error.empty()) row.error += "; ";
    row.error += to_string(m) + ": " + e.what();
  };

  InterferometerConfig cfg;
  try {
    cfg = spec.config_at(x);
    cfg.validate();
  } catch (const std::exception& e) {
    row.error = e.what();
    return row;
  }

  std::optional<metrics::SensitivityReport> report;
  std::string report_error;
  auto sensitivity_report = [&]() -> const metrics::SensitivityReport& {
    if (!report && report_error.empty()) {
      try {
        if (spec.axis == Axis::Theta) {
          report = metrics::make_report(cfg, x, metrics::sensitivity(cfg, x), spec.snl_convention);
        } else {
          report = metrics::optimal_sensitivity(cfg, spec.snl_convention);
        }
      } catch (const std::exception& e) {
        report_error = e.what();
      }
    }
    if (!report) throw std::runtime_error(report_error);
    return *report;
  };

  for (std::size_t k = 0; k < spec.metrics.size(); ++k) {
    const Metric m = spec.metrics[k];
    try {
      switch (m) {
        case Metric::Mean: row.values[k] = metrics::signal_mean(cfg); break;
        case Metric::Visibility: row.values[k] = metrics::visibility_numeric(cfg); break;
        case Metric::Dtheta2: row.values[k] = sensitivity_report().dtheta2; break;
        case Metric::DbVsShotnoise: row.values[k] = sensitivity_report().db_vs_shotnoise; break;
      }
      if (row.values[k] && !std::isfinite(*row.values[k])) {
        row.values[k].reset();
        throw std::runtime_error("non-finite value");
      }
    } catch (const std::exception& e) {
      fail(m, e);
    }
  }
  return row;
}

}  // namespace

std::string to_string(Axis axis) {
  for (const auto& [a, name] : kAxisNames)
    if (a == axis) return std::string(name);
  return "?";
}

Axis parse_axis(std::string_view text) {
  for (const auto& [a, name] : kAxisNames)
    if (name == text) return a;
  throw DomainError("unknown axis '" + std::string(text) + "'");
}

std::string to_string(Metric metric) {
  for (const auto& [m, name] : kMetricNames)
    if (m == metric) return std::string(name);
  return "?";
}

Metric parse_metric(std::string_view text) {
  for (const auto& [m, name] : kMetricNames)
    if (name == text) return m;
  throw DomainError("unknown metric '" + std::string(text) + "'");
}

void SweepSpec::validate() const {
  if (steps < 2 || steps > 1'000'000) throw DomainError("steps must lie in [2, 1e6]");
  check_axis_value(axis, lo);
  check_axis_value(axis, hi);
  if (metrics.empty()) throw DomainError("at least one metric is required");
  if (base) {
    if (!(base->ts2 > 0.0 && base->ts2 <= 1.0) || !(base->ti2 > 0.0 && base->ti2 <= 1.0)) {
      throw DomainError("base transmissions must lie in (0,1]");
    }
  }
  fixed.validate();
}

std::vector<double> SweepSpec::axis_values() const {
  std::vector<double> xs(static_cast<std::size_t>(steps));
  const double span = steps - 1;
  for (int k = 0; k < steps; ++k) xs[k] = (lo * (span - k) + hi * k) / span;
  xs.back() = hi;
  return xs;
}

bool SweepSpec::has_metric(Metric m) const {
  return std::find(metrics.begin(), metrics.end(), m) != metrics.end();
}

InterferometerConfig SweepSpec::config_at(double x) const {
  InterferometerConfig cfg = fixed;
  double ts2 = fixed.t_s * fixed.t_s;
  double ti2 = fixed.t_i * fixed.t_i;
  const bool sweeps_signal = axis == Axis::SignalT2 || axis == Axis::BothT2;
  const bool sweeps_idler = axis == Axis::IdlerT2 || axis == Axis::BothT2;
  if (sweeps_signal) ts2 = x;
  if (sweeps_idler) ti2 = x;
  if (base) {
    if (!(sweeps_signal && axis_total)) ts2 *= base->ts2;
    if (!(sweeps_idler && axis_total)) ti2 *= base->ti2;
  }
  cfg.t_s = std::sqrt(ts2);
  cfg.t_i = std::sqrt(ti2);
  switch (axis) {
    case Axis::Theta: cfg.theta = x; break;
    case Axis::SeedPhotons: cfg.n_i = x; break;
    case Axis::Gain1: cfg.g1 = x; break;
    case Axis::Gain2: cfg.g2 = x; break;
    default: break;
  }
  return cfg;
}

int threads_from_env() {
  int n = 0;
  if (const char* env = std::getenv("SU11_THREADS")) n = std::atoi(env);
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(n, 1);
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads) {
  spec.validate();
  const std::vector<double> xs = spec.axis_values();
  std::vector<SweepRow> rows(xs.size());
  detail::parallel_for(xs.size(), threads > 0 ? threads : threads_from_env(),
                       [&](std::size_t i) { rows[i] = evaluate(spec, xs[i]); });
  return rows;
}

}  // namespace su11
