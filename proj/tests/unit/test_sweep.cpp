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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "su11/closed_form.hpp"
#include "su11/figures.hpp"
#include "su11/sweep.hpp"

namespace su11 {
namespace {

using std::numbers::pi;

TEST(Sweep, NamesRoundTrip) {
  for (Axis a : {Axis::SignalT2, Axis::IdlerT2, Axis::BothT2, Axis::Theta, Axis::SeedPhotons, Axis::Gain1,
                 Axis::Gain2}) {
    EXPECT_EQ(parse_axis(to_string(a)), a);
  }
  for (Metric m : {Metric::Mean, Metric::Visibility, Metric::Dtheta2, Metric::DbVsShotnoise}) {
    EXPECT_EQ(parse_metric(to_string(m)), m);
  }
  EXPECT_THROW(parse_axis("t_x2"), DomainError);
  EXPECT_THROW(parse_metric("contrast"), DomainError);
}

TEST(Sweep, AxisValuesEndExactlyAtBounds) {
  SweepSpec s{.lo = 0.01, .hi = 1.0, .steps = 100};
  const auto xs = s.axis_values();
  ASSERT_EQ(xs.size(), 100u);
  EXPECT_EQ(xs.front(), 0.01);
  EXPECT_EQ(xs.back(), 1.0);
  for (std::size_t k = 1; k < xs.size(); ++k) EXPECT_GT(xs[k], xs[k - 1]);
}

TEST(Sweep, ValidationRejectsIllegalSpecs) {
  EXPECT_THROW((SweepSpec{.steps = 1}).validate(), DomainError);
  EXPECT_THROW((SweepSpec{.steps = 1'000'001}).validate(), DomainError);
  EXPECT_THROW((SweepSpec{.axis = Axis::IdlerT2, .hi = 1.2}).validate(), DomainError);
  EXPECT_THROW((SweepSpec{.axis = Axis::SeedPhotons, .lo = -1}).validate(), DomainError);
  EXPECT_THROW((SweepSpec{.metrics = {}}).validate(), DomainError);
  EXPECT_THROW((SweepSpec{.base = BaseTransmission{0.0, 0.5}}).validate(), DomainError);
  EXPECT_NO_THROW((SweepSpec{.axis = Axis::Theta, .lo = 0, .hi = 2 * pi}).validate());
}

TEST(Sweep, BaseTransmissionComposition) {
  SweepSpec s{.axis = Axis::SignalT2, .base = BaseTransmission{0.52, 0.42}};
  auto cfg = s.config_at(0.5);
  EXPECT_NEAR(cfg.t_s * cfg.t_s, 0.26, 1e-15);
  EXPECT_NEAR(cfg.t_i * cfg.t_i, 0.42, 1e-15);
  s.axis_total = true;
  cfg = s.config_at(0.16);
  EXPECT_NEAR(cfg.t_s * cfg.t_s, 0.16, 1e-15);
  EXPECT_NEAR(cfg.t_i * cfg.t_i, 0.42, 1e-15);
}

TEST(Sweep, TwoPointThetaSweepHitsFringeExtremes) {
  SweepSpec s{.axis = Axis::Theta, .lo = 0, .hi = pi, .steps = 2, .fixed = {.g1 = 0.1, .g2 = 0.1}};
  const auto rows = run_sweep(s, 1);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(*rows[0].values[0], std::pow(std::sinh(0.2), 2), 1e-14);
  EXPECT_NEAR(*rows[1].values[0], 0.0, 1e-14);
  EXPECT_TRUE(rows[0].ok());
}

TEST(Sweep, SignalLossVisibilityCurve) {
  SweepSpec s{.axis = Axis::SignalT2, .lo = 0.01, .hi = 1, .steps = 100, .fixed = {.g1 = 0.1, .g2 = 0.1},
              .metrics = {Metric::Visibility}};
  for (const auto& row : run_sweep(s)) {
    const double t = std::sqrt(row.x);
    EXPECT_NEAR(*row.values[0], 2 * t / (t * t + 1), 1e-10);
  }
}

TEST(Sweep, ErrorsAreRecordedInRow) {
  SweepSpec s{.axis = Axis::Gain1, .lo = 0, .hi = 0.1, .steps = 2,
              .metrics = {Metric::Mean, Metric::Visibility, Metric::Dtheta2}};
  const auto rows = run_sweep(s, 1);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_FALSE(rows[0].ok());
  EXPECT_TRUE(rows[0].values[0].has_value());
  EXPECT_FALSE(rows[0].values[1].has_value());
  EXPECT_FALSE(rows[0].values[2].has_value());
  EXPECT_NE(rows[0].error.find("visibility"), std::string::npos);
  // no second amplifier: sensitivity is undefined everywhere
  EXPECT_FALSE(rows[1].values[2].has_value());
}

TEST(Sweep, ConcurrencyDoesNotChangeResults) {
  SweepSpec s{.axis = Axis::IdlerT2, .lo = 0.1, .hi = 1, .steps = 23, .fixed = {.g1 = 0.1, .g2 = 0.1, .n_i = 3},
              .metrics = {Metric::Mean, Metric::Visibility, Metric::Dtheta2, Metric::DbVsShotnoise}};
  const auto serial = run_sweep(s, 1);
  const auto parallel = run_sweep(s, 4);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    EXPECT_EQ(serial[k].x, parallel[k].x);
    EXPECT_EQ(serial[k].values, parallel[k].values);
    EXPECT_EQ(serial[k].error, parallel[k].error);
  }
}

TEST(Sweep, ThreadsFromEnvironment) {
  ::setenv("SU11_THREADS", "3", 1);
  EXPECT_EQ(threads_from_env(), 3);
  ::setenv("SU11_THREADS", "0", 1);
  EXPECT_GE(threads_from_env(), 1);
  ::unsetenv("SU11_THREADS");
}

TEST(Figures, NamesAndSeries) {
  for (Figure f : all_figures()) EXPECT_EQ(parse_figure(to_string(f)), f);
  EXPECT_THROW(parse_figure("fig5"), DomainError);
  EXPECT_EQ(figure_series(Figure::Fig2a).size(), 3u);
  EXPECT_EQ(figure_series(Figure::Fig2b).size(), 6u);
  const auto fig4 = figure_series(Figure::Fig4a);
  ASSERT_EQ(fig4.size(), 2u);
  EXPECT_EQ(fig4[1].spec.fixed.n_i, 1e4);
  EXPECT_EQ(fig4[0].spec.base, (BaseTransmission{0.52, 0.42}));
}

TEST(Figures, Fig2aOrdering) {
  const auto series = run_figure(Figure::Fig2a, {.steps = 50});
  ASSERT_EQ(series.size(), 3u);
  for (std::size_t k = 0; k < series[0].rows.size(); ++k) {
    const double sl = *series[0].rows[k].values[0];
    const double il = *series[1].rows[k].values[0];
    const double sil = *series[2].rows[k].values[0];
    EXPECT_GE(sl + 1e-12, il);
    EXPECT_GE(il + 1e-12, sil);
  }
}

TEST(Figures, PlotScriptNamesEverySeries) {
  const auto series = run_figure(Figure::Fig4b, {.steps = 5});
  const auto gp = plot_script(Figure::Fig4b, series, "fig4b.csv");
  EXPECT_NE(gp.find("'fig4b.csv'"), std::string::npos);
  EXPECT_NE(gp.find("spontaneous"), std::string::npos);
  EXPECT_NE(gp.find("stimulated"), std::string::npos);
}

}  // namespace
}  // namespace su11
