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

#include "su11/metrics.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

#include "su11/closed_form.hpp"
#include "su11/gaussian.hpp"
#include "su11/golden.hpp"

namespace su11::metrics {

namespace {

constexpr int kGridPoints = 256;
constexpr double kThetaTol = 1e-8;
constexpr double kDerivativeRtol = 1e-6;
// Below this total fringe flux the contrast ratio is rounding noise.
constexpr double kFluxFloor = 1e-14;

double central_difference(const InterferometerConfig& cfg, double h) {
  const double up = signal_mean(cfg.with_theta(cfg.theta + h));
  const double down = signal_mean(cfg.with_theta(cfg.theta - h));
  return (up - down) / (2.0 * h);
}

bool derivative_agrees(double numeric, double analytic) {
  return std::abs(numeric - analytic) <= kDerivativeRtol * std::abs(analytic) + 1e-15;
}

}  // namespace

std::string to_string(ShotNoiseConvention c) {
  return c == ShotNoiseConvention::AfterOpa1 ? "after_opa1" : "after_loss";
}

ShotNoiseConvention parse_convention(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "after_opa1") return ShotNoiseConvention::AfterOpa1;
  if (lower == "after_loss") return ShotNoiseConvention::AfterLoss;
  throw DomainError("unknown shot-noise convention '" + std::string(text) + "'");
}

double signal_mean(const InterferometerConfig& cfg) {
  return photon_stats(run_interferometer(cfg), Mode::Signal).mean;
}

double visibility_numeric(const InterferometerConfig& cfg) {
  const double bright = signal_mean(cfg.with_theta(0.0));
  const double dark = signal_mean(cfg.with_theta(std::numbers::pi));
  const double total = bright + dark;
  if (!(total > kFluxFloor)) {
    throw UndefinedVisibilityError("visibility undefined: no signal photons at either fringe");
  }
  return (bright - dark) / total;
}

double signal_mean_derivative(const InterferometerConfig& cfg, double step) {
  if (!(step > 0.0)) throw DomainError("derivative step must be positive");
  const double analytic = closed_form::mean_signal_derivative(cfg);
  const double coarse = central_difference(cfg, step);
  if (derivative_agrees(coarse, analytic)) return coarse;
  const double fine = central_difference(cfg, 0.5 * step);
  const double richardson = (4.0 * fine - coarse) / 3.0;
  if (derivative_agrees(richardson, analytic)) return richardson;
  throw DerivativeMismatchError("numeric derivative " + std::to_string(richardson) +
                                " disagrees with analytic " + std::to_string(analytic));
}

double sensitivity(const InterferometerConfig& cfg, double theta0, double derivative_step) {
  const InterferometerConfig at = cfg.with_theta(theta0);
  at.validate();
  // Stationarity is decided on the propagated state, before the cross-check.
  const double probe = central_difference(at, derivative_step);
  if (std::abs(probe) < 1e-12) {
    throw StationaryPointError("d<N_s>/dtheta vanishes at theta0 = " + std::to_string(theta0));
  }
  const double slope = signal_mean_derivative(at, derivative_step);
  const double var = photon_stats(run_interferometer(at), Mode::Signal).variance;
  return var / (slope * slope);
}

double shot_noise_level(const InterferometerConfig& cfg, ShotNoiseConvention convention) {
  const PipelineStage tap = convention == ShotNoiseConvention::AfterOpa1
                                ? PipelineStage::AfterOpa1
                                : PipelineStage::AfterLoss;
  const double n_s = photon_stats(run_interferometer(cfg, tap), Mode::Signal).mean;
  if (!(n_s > 0.0)) throw DomainError("no signal photons inside the interferometer");
  return 1.0 / n_s;
}

SensitivityReport make_report(const InterferometerConfig& cfg, double theta0, double dtheta2,
                              ShotNoiseConvention convention) {
  SensitivityReport r;
  r.theta_opt = theta0;
  r.dtheta2 = dtheta2;
  r.snl_convention = convention;
  r.dtheta2_shotnoise = shot_noise_level(cfg, convention);
  r.db_vs_shotnoise = 10.0 * std::log10(r.dtheta2_shotnoise / dtheta2);
  return r;
}

SensitivityReport optimal_sensitivity(const InterferometerConfig& cfg,
                                      ShotNoiseConvention convention) {
  cfg.validate();
  if (!(cfg.g2 > 0.0)) throw DomainError("sensitivity needs g2 > 0: no interference at OPA2");

  auto objective = [&](double theta0) {
    try {
      return sensitivity(cfg, theta0);
    } catch (const StationaryPointError&) {
      return std::numeric_limits<double>::infinity();
    } catch (const DerivativeMismatchError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  const double spacing = std::numbers::pi / (kGridPoints + 1);
  std::array<double, kGridPoints> values{};
  for (int k = 0; k < kGridPoints; ++k) values[k] = objective(spacing * (k + 1));
  // min_element keeps the first minimum: smallest theta0 wins ties
  const auto best = std::min_element(values.begin(), values.end());
  if (!std::isfinite(*best)) {
    throw StationaryPointError("no working point in (0, pi) with a usable slope");
  }
  const int k = static_cast<int>(best - values.begin());
  double theta_best = spacing * (k + 1);
  double value_best = *best;

  const auto [theta_ref, value_ref] =
      golden_section_minimize(objective, spacing * k, spacing * (k + 2), kThetaTol);
  if (value_ref < value_best) {
    theta_best = theta_ref;
    value_best = value_ref;
  }
  return make_report(cfg, theta_best, value_best, convention);
}

}  // namespace su11::metrics
