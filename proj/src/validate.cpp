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

#include "su11/validate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "parallel.hpp"
#include "su11/closed_form.hpp"
#include "su11/config_io.hpp"
#include "su11/fock.hpp"
#include "su11/gaussian.hpp"
#include "su11/metrics.hpp"
#include "su11/sweep.hpp"

namespace su11 {

namespace {

enum CheckId { kClosedGauss, kGaussFockMean, kClosedFockMean, kGaussFockVar, kVisibility, kNumChecks };

struct PointResult {
  std::array<std::optional<std::pair<double, double>>, kNumChecks> pairs;
  std::string note;
};

double deviation(double a, double b) {
  const double diff = std::abs(a - b);
  if (diff <= kValidationAbsFloor) return 0.0;
  return diff / std::max(std::abs(a), std::abs(b));
}

PointResult evaluate_point(const InterferometerConfig& cfg) {
  PointResult r;
  const double closed = closed_form::mean_signal(cfg);
  const PhotonStats gauss = photon_stats(run_interferometer(cfg), Mode::Signal);
  const PhotonStats fock = fock::fock_pipeline(cfg);
  r.pairs[kClosedGauss] = {closed, gauss.mean};
  r.pairs[kGaussFockMean] = {gauss.mean, fock.mean};
  r.pairs[kClosedFockMean] = {closed, fock.mean};
  r.pairs[kGaussFockVar] = {gauss.variance, fock.variance};
  try {
    r.pairs[kVisibility] = {closed_form::visibility(cfg), metrics::visibility_numeric(cfg)};
  } catch (const UndefinedVisibilityError&) {
    r.note = "undefined visibility, skipped: " + describe(cfg);
  }
  return r;
}

}  // namespace

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed(); });
}

std::string describe(const InterferometerConfig& cfg) {
  std::ostringstream os;
  os << "g1=" << format_number(cfg.g1) << " g2=" << format_number(cfg.g2) << " theta=" << format_number(cfg.theta)
     << " ts2=" << format_number(cfg.t_s * cfg.t_s) << " ti2=" << format_number(cfg.t_i * cfg.t_i)
     << " n_i=" << format_number(cfg.n_i);
  return os.str();
}

std::vector<InterferometerConfig> validation_grid(std::uint64_t seed, int points) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  };
  std::vector<InterferometerConfig> grid;
  grid.reserve(static_cast<std::size_t>(std::max(points, 0)));
  for (int k = 0; k < points; ++k) {
    InterferometerConfig c;
    c.g1 = uniform(0.0, 0.3);
    c.g2 = uniform(0.0, 0.3);
    c.theta = uniform(0.0, 2.0 * std::numbers::pi);
    c.t_s = uniform(0.1, 1.0);
    c.t_i = uniform(0.1, 1.0);
    c.n_i = uniform(0.0, 4.0);
    grid.push_back(c);
  }
  return grid;
}

ValidationReport validate(std::uint64_t seed, int points, bool force_singular, int threads) {
  if (points < 0 || points > 10000) throw DomainError("points must lie in [0, 10000]");
  ValidationReport report;
  report.seed = seed;
  report.points = points;
  report.grid = validation_grid(seed, points);
  if (force_singular && !report.grid.empty()) {
    report.grid.front().g1 = 0.0;
    report.grid.front().g2 = 0.0;
  }

  for (const auto& [name, tol] : {std::pair{"closed_vs_gaussian_mean", 1e-10}, std::pair{"gaussian_vs_fock_mean", 1e-7},
                                   std::pair{"closed_vs_fock_mean", 1e-7}, std::pair{"gaussian_vs_fock_variance", 1e-6},
                                   std::pair{"closed_vs_numeric_visibility", 1e-10}}) {
    ValidationCheck check;
    check.name = name;
    check.tolerance = tol;
    report.checks.push_back(check);
  }

  std::vector<PointResult> results(report.grid.size());
  detail::parallel_for(results.size(), threads > 0 ? threads : threads_from_env(),
                       [&](std::size_t i) { results[i] = evaluate_point(report.grid[i]); });

  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].note.empty()) report.notes.push_back(results[i].note);
    for (int c = 0; c < kNumChecks; ++c) {
      ValidationCheck& check = report.checks[c];
      const auto& pair = results[i].pairs[c];
      if (!pair) {
        ++check.skipped;
        continue;
      }
      ++check.evaluated;
      const double dev = deviation(pair->first, pair->second);
      if (check.evaluated == 1 || dev > check.worst) {
        check.worst = dev;
        check.worst_cfg = report.grid[i];
      }
      if (dev > check.tolerance) {
        ++check.breaches;
        report.notes.push_back(check.name + " breach (" + format_number(dev) + "): " + describe(report.grid[i]));
      }
    }
  }
  return report;
}

std::string format_report(const ValidationReport& report) {
  std::ostringstream os;
  os << "validation seed=" << report.seed << " points=" << report.points << '\n';
  for (const auto& c : report.checks) {
    os << (c.passed() ? "[PASS] " : "[FAIL] ") << c.name << " worst=" << format_number(c.worst)
       << " tol=" << format_number(c.tolerance) << " evaluated=" << c.evaluated << " skipped=" << c.skipped
       << " breaches=" << c.breaches;
    if (c.evaluated > 0) os << " at " << describe(c.worst_cfg);
    os << '\n';
  }
  for (const auto& n : report.notes) os << "note: " << n << '\n';
  os << (report.passed() ? "result: PASS" : "result: FAIL") << '\n';
  return os.str();
}

}  // namespace su11
