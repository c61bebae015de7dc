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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "su11/config.hpp"
#include "su11/metrics.hpp"

namespace su11 {

/// Swept parameter. The *2 axes sweep power transmission t^2.
enum class Axis { SignalT2, IdlerT2, BothT2, Theta, SeedPhotons, Gain1, Gain2 };

/// Observable evaluated at every sweep point.
enum class Metric { Mean, Visibility, Dtheta2, DbVsShotnoise };

/// Config-file names: t_s2, t_i2, t_both2, theta, n_i, G1, G2.
std::string to_string(Axis axis);
Axis parse_axis(std::string_view text);
/// mean, visibility, dtheta2, db_vs_shotnoise.
std::string to_string(Metric metric);
Metric parse_metric(std::string_view text);

/// Base (initial) power transmissions that any extra swept loss multiplies.
struct BaseTransmission {
  double ts2 = 1.0;
  double ti2 = 1.0;
  bool operator==(const BaseTransmission&) const = default;
};

/// A one-dimensional parameter sweep.
///
/// `fixed` holds the non-swept parameters. With a base transmission set, the
/// power transmission of each mode is base * (swept or fixed value); with
/// `axis_total` the swept value is taken as the total transmission of the
/// swept mode instead.
struct SweepSpec {
  Axis axis = Axis::SignalT2;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 11;
  InterferometerConfig fixed;
  std::vector<Metric> metrics{Metric::Mean};
  std::optional<BaseTransmission> base;
  bool axis_total = false;
  metrics::ShotNoiseConvention snl_convention = metrics::ShotNoiseConvention::AfterOpa1;

  /// Throws DomainError on an illegal range, step count, base or fixed config.
  void validate() const;
  std::vector<double> axis_values() const;
  /// Effective interferometer configuration at axis value x.
  InterferometerConfig config_at(double x) const;

  bool has_metric(Metric m) const;
  bool operator==(const SweepSpec&) const = default;
};

/// One evaluated point. `values` is aligned with SweepSpec::metrics; a metric
/// that failed is empty and its message is appended to `error`.
struct SweepRow {
  double x = 0.0;
  std::vector<std::optional<double>> values;
  std::string error;

  bool ok() const { return error.empty(); }
};

/// Evaluates every point, concurrently when `threads` != 1. Rows come back
/// in axis order regardless of scheduling. threads == 0 reads SU11_THREADS
/// (unset or 0 = hardware concurrency).
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads = 0);

/// Worker count from SU11_THREADS.
int threads_from_env();

}  // namespace su11
