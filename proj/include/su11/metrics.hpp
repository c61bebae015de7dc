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

#include "su11/config.hpp"

namespace su11::metrics {

/// Where the "signal photons inside the interferometer" are counted for the
/// shot-noise level 1/N_s.
enum class ShotNoiseConvention {
  AfterOpa1,  ///< signal mean right after the first amplifier
  AfterLoss,  ///< signal mean after the first amplifier and internal loss
};

std::string to_string(ShotNoiseConvention c);
/// Accepts "after_opa1" / "after_loss" (case-insensitive). Throws DomainError otherwise.
ShotNoiseConvention parse_convention(std::string_view text);

struct SensitivityReport {
  double theta_opt = 0.0;          ///< optimal working point, radians
  double dtheta2 = 0.0;            ///< minimal detectable phase variance, rad^2
  double dtheta2_shotnoise = 0.0;  ///< 1/N_s
  double db_vs_shotnoise = 0.0;    ///< 10 log10(shot noise / dtheta2); positive = below shot noise
  ShotNoiseConvention snl_convention = ShotNoiseConvention::AfterOpa1;
};

/// Signal mean at the output of the Gaussian pipeline.
double signal_mean(const InterferometerConfig& cfg);

/// Fringe contrast from propagated states at theta = 0 and theta = pi.
/// Throws UndefinedVisibilityError if both fringes are dark.
double visibility_numeric(const InterferometerConfig& cfg);

/// Central-difference d<N_s>/dtheta at cfg.theta, validated against the
/// analytic derivative (1e-6 relative) with one Richardson step as fallback.
double signal_mean_derivative(const InterferometerConfig& cfg, double step = 1e-5);

/// Error-propagation phase variance Var(N_s) / |d<N_s>/dtheta|^2 at theta0.
/// Throws StationaryPointError if |d<N_s>/dtheta| < 1e-12.
double sensitivity(const InterferometerConfig& cfg, double theta0, double derivative_step = 1e-5);

/// 1/N_s. Throws DomainError if no signal photons at the tap point.
double shot_noise_level(const InterferometerConfig& cfg, ShotNoiseConvention convention);

/// Minimizes sensitivity over theta0 in (0, pi): 256-point grid, then
/// golden-section refinement to 1e-8 rad. Requires g2 > 0. Points where the
/// sensitivity cannot be evaluated (stationary or derivative mismatch) are
/// skipped by the search. Ties on the grid go to the smallest theta0.
SensitivityReport optimal_sensitivity(
    const InterferometerConfig& cfg,
    ShotNoiseConvention convention = ShotNoiseConvention::AfterOpa1);

/// Fills the shot-noise fields of a report from dtheta2.
SensitivityReport make_report(const InterferometerConfig& cfg, double theta0, double dtheta2,
                              ShotNoiseConvention convention);

}  // namespace su11::metrics
