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

#include "su11/config.hpp"

namespace su11::closed_form {

/// Gain combinations appearing in the analytic signal photon number.
struct GainShorthand {
  double beta = 0.0;      ///< sinh(2 G1) sinh(2 G2) / 2
  double lambda21 = 0.0;  ///< sinh^2(G2) cosh^2(G1)
  double lambda12 = 0.0;  ///< sinh^2(G1) cosh^2(G2)
  double delta1 = 1.0;    ///< cosh^2(G1)
  double delta2 = 0.0;    ///< sinh^2(G2)
};

GainShorthand shorthand(const InterferometerConfig& cfg);

/// Signal output photon number with loss and idler seeding:
/// (n_i+1)(beta cos(theta) t_i t_s + lambda21 t_i^2 + lambda12 t_s^2) + delta2 (1 - t_i^2).
double mean_signal(const InterferometerConfig& cfg);

/// d<N_s>/dtheta = -(n_i+1) beta sin(theta) t_i t_s.
double mean_signal_derivative(const InterferometerConfig& cfg);

/// General fringe visibility for arbitrary gains, losses and seed. theta is ignored.
/// Throws UndefinedVisibilityError when the denominator vanishes.
double visibility(const InterferometerConfig& cfg);

// Balanced-gain special cases. They take a single gain so they cannot be
// called outside G1 == G2; anything else goes through visibility().

/// Loss on the signal only: 2 t_s / (t_s^2 + 1). Independent of gain and seed.
double visibility_signal_loss(double t_s);

/// Loss on the idler only.
double visibility_idler_loss(double t_i, double gain, double n_i);

/// Equal loss t on both modes.
double visibility_symmetric_loss(double t, double gain, double n_i);

/// Lossless, balanced, seeded sensitivity in its two algebraic forms.
struct IdealSensitivity {
  double by_gain;   ///< 1 / ((1+n_i) sinh^2(2G))
  double by_pairs;  ///< 1 / (4 (1+n_i) (N^2 + N)), N = sinh^2(G)
};

/// Throws InfiniteSensitivityError for G == 0. Both forms are checked against
/// each other to 1e-12 relative before returning.
IdealSensitivity ideal_sensitivity(double gain, double n_i);

}  // namespace su11::closed_form
