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

#include <stdexcept>
#include <string>

namespace su11 {

/// Which of the two field modes an operation addresses. The signal is the
/// measured mode, the idler the conjugated one.
enum class Mode { Signal, Idler };

// Error taxonomy. Every failure a caller can act on has its own type so that
// sweeps can flag a row without parsing messages.

/// Argument outside the legal domain (negative seed, transmission > 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Visibility requested where both fringe extremes carry no photons.
class UndefinedVisibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Error-propagation sensitivity diverges (zero gain).
class InfiniteSensitivityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Working point sits on an interference extremum: d<N>/dtheta vanishes.
class StationaryPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Numeric derivative disagrees with the analytic one even after Richardson
/// extrapolation.
class DerivativeMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fock-space cutoff too small for the requested state.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full parameter set of a lossy, seeded SU(1,1) interferometer.
///
/// Transmissions are amplitude coefficients; the power transmission seen on
/// figure axes and in config files is their square.
struct InterferometerConfig {
  double g1 = 0.0;     ///< gain of the first amplifier
  double g2 = 0.0;     ///< gain of the second amplifier
  double theta = 0.0;  ///< internal phase, radians
  double t_s = 1.0;    ///< signal amplitude transmission
  double t_i = 1.0;    ///< idler amplitude transmission
  double n_i = 0.0;    ///< mean photon number of the coherent idler seed

  /// Throws DomainError unless gains are finite and non-negative,
  /// transmissions lie in [0,1] and the seed is non-negative.
  void validate() const;

  /// Copy with theta replaced.
  InterferometerConfig with_theta(double new_theta) const {
    InterferometerConfig c = *this;
    c.theta = new_theta;
    return c;
  }

  bool operator==(const InterferometerConfig&) const = default;
};

std::string to_string(Mode mode);

}  // namespace su11
