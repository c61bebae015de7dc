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

#include "su11/closed_form.hpp"

#include <cmath>
#include <string>

namespace su11::closed_form {

namespace {

double sq(double x) { return x * x; }

void require_unit_interval(double t, const char* name) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError(std::string(name) + " must lie in [0,1]");
}

void require_gain_seed(double gain, double n_i) {
  if (!std::isfinite(gain) || gain < 0.0) throw DomainError("gain must be finite and >= 0");
  if (!std::isfinite(n_i) || n_i < 0.0) throw DomainError("n_i must be >= 0");
}

}  // namespace

GainShorthand shorthand(const InterferometerConfig& cfg) {
  cfg.validate();
  const double c1 = std::cosh(cfg.g1), s1 = std::sinh(cfg.g1);
  const double c2 = std::cosh(cfg.g2), s2 = std::sinh(cfg.g2);
  GainShorthand g;
  g.beta = 0.5 * std::sinh(2.0 * cfg.g1) * std::sinh(2.0 * cfg.g2);
  g.lambda21 = sq(s2) * sq(c1);
  g.lambda12 = sq(s1) * sq(c2);
  g.delta1 = sq(c1);
  g.delta2 = sq(s2);
  return g;
}

double mean_signal(const InterferometerConfig& cfg) {
  const GainShorthand g = shorthand(cfg);
  const double stim = cfg.n_i + 1.0;
  return stim * (g.beta * std::cos(cfg.theta) * cfg.t_i * cfg.t_s + g.lambda21 * sq(cfg.t_i) +
                 g.lambda12 * sq(cfg.t_s)) +
         g.delta2 * (1.0 - sq(cfg.t_i));
}

double mean_signal_derivative(const InterferometerConfig& cfg) {
  const GainShorthand g = shorthand(cfg);
  return -(cfg.n_i + 1.0) * g.beta * std::sin(cfg.theta) * cfg.t_i * cfg.t_s;
}

double visibility(const InterferometerConfig& cfg) {
  const GainShorthand g = shorthand(cfg);
  const double stim = cfg.n_i + 1.0;
  const double den = g.lambda12 * stim * sq(cfg.t_s) +
                     g.delta2 * (1.0 + sq(cfg.t_i) * (stim * g.delta1 - 1.0));
  if (!(den > 0.0)) throw UndefinedVisibilityError("visibility undefined: no photons at either fringe");
  return g.beta * stim * cfg.t_i * cfg.t_s / den;
}

double visibility_signal_loss(double t_s) {
  require_unit_interval(t_s, "t_s");
  return 2.0 * t_s / (sq(t_s) + 1.0);
}

double visibility_idler_loss(double t_i, double gain, double n_i) {
  require_unit_interval(t_i, "t_i");
  require_gain_seed(gain, n_i);
  const double stim_c2 = (n_i + 1.0) * sq(std::cosh(gain));
  return 2.0 * stim_c2 * t_i / (stim_c2 * (sq(t_i) + 1.0) + 1.0 - sq(t_i));
}

double visibility_symmetric_loss(double t, double gain, double n_i) {
  require_unit_interval(t, "t");
  require_gain_seed(gain, n_i);
  const double num = 2.0 * (n_i + 1.0) * sq(t) * sq(std::cosh(gain));
  return num / (num + 1.0 - sq(t));
}

IdealSensitivity ideal_sensitivity(double gain, double n_i) {
  require_gain_seed(gain, n_i);
  if (gain == 0.0) throw InfiniteSensitivityError("no gain: sensitivity diverges");
  const double n_sq = sq(std::sinh(gain));
  IdealSensitivity r{1.0 / ((1.0 + n_i) * sq(std::sinh(2.0 * gain))),
                     1.0 / (4.0 * (1.0 + n_i) * (sq(n_sq) + n_sq))};
  if (std::abs(r.by_gain - r.by_pairs) > 1e-12 * r.by_gain) {
    throw DomainError("ideal sensitivity forms disagree beyond 1e-12");
  }
  return r;
}

}  // namespace su11::closed_form
