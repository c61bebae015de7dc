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

#include <cstdint>
#include <string>
#include <vector>

#include "su11/config.hpp"

namespace su11 {

/// Worst-case outcome of one agreement check over the grid.
struct ValidationCheck {
  std::string name;
  double tolerance = 0.0;      ///< relative tolerance
  double worst = 0.0;          ///< largest relative deviation above the absolute floor
  InterferometerConfig worst_cfg;
  int evaluated = 0;
  int skipped = 0;
  int breaches = 0;

  bool passed() const { return breaches == 0; }
};

struct ValidationReport {
  std::uint64_t seed = 0;
  int points = 0;
  std::vector<ValidationCheck> checks;
  std::vector<std::string> notes;          ///< skipped singular points and breach details
  std::vector<InterferometerConfig> grid;

  bool passed() const;
};

/// Absolute deviation below which two values always agree.
inline constexpr double kValidationAbsFloor = 1e-12;

/// Seeded grid inside the oracle regime: gains in [0,0.3], amplitude
/// transmissions in [0.1,1], theta in [0,2pi), seed photons in [0,4]. The
/// draw uses raw 53-bit mantissas so the grid is identical on every platform.
std::vector<InterferometerConfig> validation_grid(std::uint64_t seed, int points);

/// Three-way agreement suite (closed forms, Gaussian engine, Fock oracle) on
/// validation_grid(seed, points). With `force_singular` the first point has
/// both gains zero, where visibility is undefined and skipped.
/// Throws DomainError unless 0 <= points <= 10000.
ValidationReport validate(std::uint64_t seed, int points, bool force_singular = false, int threads = 0);

/// Human-readable report, one line per check.
std::string format_report(const ValidationReport& report);

std::string describe(const InterferometerConfig& cfg);

}  // namespace su11
