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

#include <Eigen/Dense>

#include "su11/config.hpp"

namespace su11 {

/// Two-mode Gaussian state in quadrature ordering (x_s, p_s, x_i, p_i) with
/// x = (a + a^dagger)/sqrt(2), so that vacuum has covariance I/2.
struct GaussianTwoModeState {
  Eigen::Matrix4d cov = 0.5 * Eigen::Matrix4d::Identity();
  Eigen::Vector4d disp = Eigen::Vector4d::Zero();

  /// 2x2 covariance block of one mode.
  Eigen::Matrix2d reduced_cov(Mode mode) const;
  /// Displacement of one mode.
  Eigen::Vector2d reduced_disp(Mode mode) const;

  /// Both symplectic eigenvalues, ascending. Physical states have nu >= 1/2.
  Eigen::Vector2d symplectic_eigenvalues() const;
};

/// Mean and variance of a mode's photon number.
struct PhotonStats {
  double mean = 0.0;
  double variance = 0.0;
};

GaussianTwoModeState vacuum_state();

/// Displaces the idler by a real coherent amplitude carrying n_i photons.
/// Requires the idler to be undisplaced on entry.
GaussianTwoModeState seed_idler(const GaussianTwoModeState& state, double n_i);

/// Two-mode squeezer at squeezing phase zero: a_s -> cosh(G) a_s + sinh(G) a_i^dagger.
GaussianTwoModeState apply_squeezer(const GaussianTwoModeState& state, double gain);

/// Rotates one mode: (x, p) -> (x cos(theta) + p sin(theta), -x sin(theta) + p cos(theta)).
GaussianTwoModeState apply_phase(const GaussianTwoModeState& state, double theta,
                                 Mode target = Mode::Signal);

/// Pure-loss channel on both modes, amplitude transmissions t_s and t_i.
GaussianTwoModeState apply_loss(const GaussianTwoModeState& state, double t_s, double t_i);

/// Photon-number mean and variance of one mode from its reduced covariance V
/// and displacement d:
///   mean     = (tr V - 1)/2 + |d|^2/2
///   variance = tr(V^2)/2 + d^T V d - 1/4
PhotonStats photon_stats(const GaussianTwoModeState& state, Mode mode);

/// Intermediate taps of the interferometer pipeline.
enum class PipelineStage { AfterSeed, AfterOpa1, AfterLoss, AfterPhase, Output };

/// seed_idler(n_i) -> squeezer(G1) -> loss(t_s, t_i) -> phase(theta, signal) -> squeezer(G2),
/// stopped after `stop`.
GaussianTwoModeState run_interferometer(const InterferometerConfig& cfg,
                                        PipelineStage stop = PipelineStage::Output);

}  // namespace su11
