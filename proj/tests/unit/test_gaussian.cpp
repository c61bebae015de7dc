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
#include <numbers>

#include "su11/closed_form.hpp"
#include "su11/gaussian.hpp"
#include "support.hpp"

namespace su11 {
namespace {

using std::numbers::pi;

// Frozen from 30-digit evaluation of the closed forms.
constexpr double kSinh2_01 = 0.0100333778095379231;    // sinh^2(0.1)
constexpr double kThermalVar_01 = 0.0101340464798068512;  // sinh^2(0.1) cosh^2(0.1)
constexpr double kSinh2_02 = 0.0405361859192274046;    // sinh^2(0.2)

GaussianTwoModeState tmsv(double g) { return apply_squeezer(vacuum_state(), g); }

void expect_state_near(const GaussianTwoModeState& a, const GaussianTwoModeState& b, double tol) {
  EXPECT_LE((a.cov - b.cov).cwiseAbs().maxCoeff(), tol);
  EXPECT_LE((a.disp - b.disp).cwiseAbs().maxCoeff(), tol);
}

TEST(Vacuum, HalfIdentityCovarianceNoDisplacement) {
  const auto v = vacuum_state();
  EXPECT_EQ(v.cov, 0.5 * Eigen::Matrix4d::Identity());
  EXPECT_EQ(v.disp, Eigen::Vector4d::Zero());
  const auto s = photon_stats(v, Mode::Signal);
  EXPECT_DOUBLE_EQ(s.mean, 0.0);
  EXPECT_DOUBLE_EQ(s.variance, 0.0);
}

TEST(Vacuum, FixedPointOfIdentityMaps) {
  const auto v = vacuum_state();
  expect_state_near(apply_squeezer(v, 0.0), v, 0.0);
  expect_state_near(apply_loss(v, 1.0, 1.0), v, 0.0);
  expect_state_near(apply_loss(v, 0.3, 0.7), v, 1e-15);
  expect_state_near(apply_phase(v, 1.234, Mode::Signal), v, 1e-15);
  expect_state_near(apply_phase(v, 1.234, Mode::Idler), v, 1e-15);
}

TEST(SeedIdler, CoherentDisplacement) {
  const auto zero = seed_idler(vacuum_state(), 0.0);
  expect_state_near(zero, vacuum_state(), 0.0);

  const auto s50 = seed_idler(vacuum_state(), 50.0);
  EXPECT_DOUBLE_EQ(s50.disp[2], std::sqrt(100.0));
  EXPECT_DOUBLE_EQ(s50.disp[3], 0.0);
  const auto st = photon_stats(s50, Mode::Idler);
  EXPECT_NEAR(st.mean, 50.0, 1e-12);
  EXPECT_NEAR(st.variance, 50.0, 1e-12);

  const auto big = photon_stats(seed_idler(vacuum_state(), 1e4), Mode::Idler);
  EXPECT_NEAR(big.mean, 1e4, 1e-8);
  EXPECT_NEAR(big.variance, 1e4, 1e-6);
}

TEST(SeedIdler, Errors) {
  EXPECT_THROW(seed_idler(vacuum_state(), -1.0), DomainError);
  const auto seeded = seed_idler(vacuum_state(), 1.0);
  EXPECT_THROW(seed_idler(seeded, 1.0), DomainError);
}

TEST(Squeezer, TwoModeSqueezedVacuumMoments) {
  const auto st = tmsv(0.1);
  const auto s = photon_stats(st, Mode::Signal);
  const auto i = photon_stats(st, Mode::Idler);
  EXPECT_NEAR(s.mean, kSinh2_01, 1e-15);
  EXPECT_NEAR(s.variance, kThermalVar_01, 1e-15);
  EXPECT_NEAR(i.mean, s.mean, 1e-16);
}

TEST(Squeezer, MatchesFieldInputOutputRelation) {
  // x_s -> cosh x_s + sinh x_i, p_s -> cosh p_s - sinh p_i on a displaced input
  GaussianTwoModeState in;
  in.disp << 0.3, -0.2, 0.7, 0.5;
  const double g = 0.4;
  const auto out = apply_squeezer(in, g);
  EXPECT_NEAR(out.disp[0], std::cosh(g) * 0.3 + std::sinh(g) * 0.7, 1e-15);
  EXPECT_NEAR(out.disp[1], std::cosh(g) * -0.2 - std::sinh(g) * 0.5, 1e-15);
  EXPECT_NEAR(out.disp[2], std::cosh(g) * 0.7 + std::sinh(g) * 0.3, 1e-15);
  EXPECT_NEAR(out.disp[3], std::cosh(g) * 0.5 - std::sinh(g) * -0.2, 1e-15);
}

TEST(Phase, FullTurnIsIdentity) {
  auto st = seed_idler(vacuum_state(), 3.0);
  st = apply_squeezer(st, 0.2);
  expect_state_near(apply_phase(st, 0.0), st, 0.0);
  expect_state_near(apply_phase(st, 2.0 * pi), st, 1e-12);
}

TEST(Phase, DestructiveFringeForBalancedGains) {
  auto st = apply_phase(tmsv(0.1), pi, Mode::Signal);
  st = apply_squeezer(st, 0.1);
  EXPECT_NEAR(photon_stats(st, Mode::Signal).mean, 0.0, 1e-15);
}

TEST(Loss, EdgeCasesAndFullAbsorption) {
  const auto st = tmsv(0.1);
  expect_state_near(apply_loss(st, 1.0, 1.0), st, 0.0);
  const auto absorbed = apply_loss(st, 0.0, 1.0);
  EXPECT_NEAR(photon_stats(absorbed, Mode::Signal).mean, 0.0, 1e-16);
  EXPECT_LE((absorbed.reduced_cov(Mode::Signal) - 0.5 * Eigen::Matrix2d::Identity()).norm(), 1e-16);
}

TEST(Loss, RejectsTransmissionOutsideUnitInterval) {
  EXPECT_THROW(apply_loss(vacuum_state(), 1.1, 1.0), DomainError);
  EXPECT_THROW(apply_loss(vacuum_state(), 1.0, -0.1), DomainError);
}

TEST(Pipeline, LosslessFringeExtremes) {
  InterferometerConfig cfg{.g1 = 0.1, .g2 = 0.1, .theta = 0.0};
  EXPECT_NEAR(photon_stats(run_interferometer(cfg), Mode::Signal).mean, kSinh2_02, 1e-15);
  cfg.theta = pi;
  EXPECT_NEAR(photon_stats(run_interferometer(cfg), Mode::Signal).mean, 0.0, 1e-15);
}

TEST(Pipeline, NoGainIsPureAttenuation) {
  for (double theta : {0.0, 1.0, 2.5}) {
    for (double t : {0.0, 0.4, 1.0}) {
      InterferometerConfig cfg{.g1 = 0, .g2 = 0, .theta = theta, .t_s = 0.9, .t_i = t, .n_i = 7};
      const auto st = run_interferometer(cfg);
      EXPECT_NEAR(photon_stats(st, Mode::Idler).mean, 7.0 * t * t, 1e-13);
      EXPECT_NEAR(photon_stats(st, Mode::Signal).mean, 0.0, 1e-15);
    }
  }
}

TEST(Pipeline, StagesAreTapsOfTheSameRun) {
  InterferometerConfig cfg{.g1 = 0.1, .g2 = 0.2, .theta = 0.3, .t_s = 0.8, .t_i = 0.5, .n_i = 2};
  const auto opa1 = run_interferometer(cfg, PipelineStage::AfterOpa1);
  EXPECT_NEAR(photon_stats(opa1, Mode::Signal).mean, 3.0 * kSinh2_01, 1e-15);
  const auto lossy = run_interferometer(cfg, PipelineStage::AfterLoss);
  EXPECT_NEAR(photon_stats(lossy, Mode::Signal).mean, 0.64 * 3.0 * kSinh2_01, 1e-15);
}

// --- properties over random configurations ---

TEST(Properties, MeanEqualsClosedFormIncludingLargeSeeds) {
  testing::ConfigGenerator gen(7);
  for (int k = 0; k < 500; ++k) {
    auto cfg = gen.next(1.0, k % 2 ? 1e4 : 10.0);
    const double engine = photon_stats(run_interferometer(cfg), Mode::Signal).mean;
    const double analytic = closed_form::mean_signal(cfg);
    EXPECT_TRUE(testing::close(engine, analytic, 1e-10, 1e-13))
        << "k=" << k << " engine=" << engine << " analytic=" << analytic;
  }
}

TEST(Properties, PairsAreBornTogether) {
  for (double g1 : {0.05, 0.3, 1.2}) {
    for (double g2 : {0.0, 0.2, 0.9}) {
      InterferometerConfig cfg{.g1 = g1, .g2 = g2};
      const auto st = run_interferometer(cfg);
      EXPECT_NEAR(photon_stats(st, Mode::Signal).mean, photon_stats(st, Mode::Idler).mean,
                  1e-12 * (1 + photon_stats(st, Mode::Signal).mean));
    }
  }
}

TEST(Properties, MeanIsTwoPiPeriodic) {
  testing::ConfigGenerator gen(11);
  for (int k = 0; k < 100; ++k) {
    auto cfg = gen.next(0.5, 5.0);
    const double a = photon_stats(run_interferometer(cfg), Mode::Signal).mean;
    const double b = photon_stats(run_interferometer(cfg.with_theta(cfg.theta + 2 * pi)), Mode::Signal).mean;
    EXPECT_NEAR(a, b, 1e-12);
  }
}

TEST(Properties, LossCommutesWithPhase) {
  testing::ConfigGenerator gen(13);
  for (int k = 0; k < 100; ++k) {
    auto cfg = gen.next(0.6, 5.0);
    auto st = apply_squeezer(seed_idler(vacuum_state(), cfg.n_i), cfg.g1);
    const auto a = apply_phase(apply_loss(st, cfg.t_s, cfg.t_i), cfg.theta);
    const auto b = apply_loss(apply_phase(st, cfg.theta), cfg.t_s, cfg.t_i);
    expect_state_near(a, b, 1e-12);
  }
}

TEST(Properties, StatesStayPhysicalAndSymmetric) {
  testing::ConfigGenerator gen(17);
  for (int k = 0; k < 200; ++k) {
    auto cfg = gen.next(1.0, 100.0);
    for (auto stage : {PipelineStage::AfterSeed, PipelineStage::AfterOpa1, PipelineStage::AfterLoss,
                       PipelineStage::AfterPhase, PipelineStage::Output}) {
      const auto st = run_interferometer(cfg, stage);
      EXPECT_GE(st.symplectic_eigenvalues()[0], 0.5 - 1e-9);
      EXPECT_LE((st.cov - st.cov.transpose()).cwiseAbs().maxCoeff(), 1e-12);
      const auto s = photon_stats(st, Mode::Signal);
      EXPECT_GE(s.variance, -1e-12);
    }
  }
}

TEST(Properties, CoherentReducedStateIsPoissonian) {
  for (double n : {0.5, 3.0, 77.0}) {
    const auto st = apply_loss(seed_idler(vacuum_state(), n), 1.0, 0.6);
    const auto s = photon_stats(st, Mode::Idler);
    EXPECT_NEAR(s.variance, s.mean, 1e-10 * s.mean);
  }
}

// Where the phase is applied between the amplifiers (signal, idler, or split
// between them) does not change the signal photon statistics.
TEST(Properties, PhaseAssignmentDoesNotChangeSignalStatistics) {
  testing::ConfigGenerator gen(19);
  for (int k = 0; k < 100; ++k) {
    auto cfg = gen.next(0.8, 20.0);
    auto mid = apply_loss(apply_squeezer(seed_idler(vacuum_state(), cfg.n_i), cfg.g1), cfg.t_s, cfg.t_i);
    const auto on_signal = apply_squeezer(apply_phase(mid, cfg.theta, Mode::Signal), cfg.g2);
    const auto on_idler = apply_squeezer(apply_phase(mid, cfg.theta, Mode::Idler), cfg.g2);
    const auto split = apply_squeezer(
        apply_phase(apply_phase(mid, 0.5 * cfg.theta, Mode::Signal), 0.5 * cfg.theta, Mode::Idler), cfg.g2);
    const auto ref = photon_stats(on_signal, Mode::Signal);
    for (const auto& other : {on_idler, split}) {
      const auto s = photon_stats(other, Mode::Signal);
      EXPECT_TRUE(testing::close(s.mean, ref.mean, 1e-10, 1e-14));
      EXPECT_TRUE(testing::close(s.variance, ref.variance, 1e-10, 1e-14));
    }
  }
}

}  // namespace
}  // namespace su11
