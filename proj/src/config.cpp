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

#include "su11/config.hpp"

#include <cmath>

namespace su11 {

namespace {

void require_transmission(double t, const char* name) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0,1], got " + std::to_string(t));
  }
}

}  // namespace

void InterferometerConfig::validate() const {
  if (!std::isfinite(g1) || g1 < 0.0) throw DomainError("g1 must be finite and >= 0");
  if (!std::isfinite(g2) || g2 < 0.0) throw DomainError("g2 must be finite and >= 0");
  if (!std::isfinite(theta)) throw DomainError("theta must be finite");
  require_transmission(t_s, "t_s");
  require_transmission(t_i, "t_i");
  if (!std::isfinite(n_i) || n_i < 0.0) throw DomainError("n_i must be finite and >= 0");
}

std::string to_string(Mode mode) { return mode == Mode::Signal ? "signal" : "idler"; }

}  // namespace su11
