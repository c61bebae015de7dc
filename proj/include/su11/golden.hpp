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
#include <utility>

namespace su11 {

/// Golden-section minimization of a unimodal f on [lo, hi]. Stops once the
/// bracket is narrower than `tol`. Returns the best abscissa seen and its value.
/// Non-finite objective values count as +infinity.
template <typename F>
std::pair<double, double> golden_section_minimize(F&& f, double lo, double hi, double tol,
                                                  int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto eval = [&](double x) {
    const double v = f(x);
    return std::isfinite(v) ? v : INFINITY;
  };

  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = eval(c);
  double fd = eval(d);
  for (int it = 0; it < max_iter && (hi - lo) > tol; ++it) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = eval(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = eval(d);
    }
  }
  return fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace su11
