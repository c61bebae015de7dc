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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "su11/config.hpp"

namespace su11::testing {

/// |a - b| <= rtol * max(|a|, |b|) or <= atol.
inline bool close(double a, double b, double rtol, double atol = 0.0) {
  const double diff = std::abs(a - b);
  return diff <= atol || diff <= rtol * std::max(std::abs(a), std::abs(b));
}

/// Seeded generator of interferometer configurations inside given ranges.
class ConfigGenerator {
 public:
  explicit ConfigGenerator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  InterferometerConfig next(double max_gain, double max_seed, double min_t = 0.0) {
    InterferometerConfig c;
    c.g1 = uniform(0.0, max_gain);
    c.g2 = uniform(0.0, max_gain);
    c.theta = uniform(0.0, 2.0 * std::numbers::pi);
    c.t_s = uniform(min_t, 1.0);
    c.t_i = uniform(min_t, 1.0);
    c.n_i = uniform(0.0, max_seed);
    return c;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace su11::testing
