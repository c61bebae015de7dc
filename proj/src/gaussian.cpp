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

#include "su11/gaussian.hpp"

#include <algorithm>
#include <cmath>

namespace su11 {

namespace {

int offset(Mode mode) { return mode == Mode::Signal ? 0 : 2; }

GaussianTwoModeState transform(const GaussianTwoModeState& in, const Eigen::Matrix4d& s) {
  GaussianTwoModeState out;
  Eigen::Matrix4d c = s * in.cov * s.transpose();
  out.cov = 0.5 * (c + c.transpose());
  out.disp = s * in.disp;
  return out;
}

}  // namespace

Eigen::Matrix2d GaussianTwoModeState::reduced_cov(Mode mode) const {
  const int o = offset(mode);
  return cov.block<2, 2>(o, o);
}

Eigen::Vector2d GaussianTwoModeState::reduced_disp(Mode mode) const {
  return disp.segment<2>(offset(mode));
}

Eigen::Vector2d GaussianTwoModeState::symplectic_eigenvalues() const {
  // Omega * cov has eigenvalues +-i nu_k.
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = omega(2, 3) = 1.0;
  omega(1, 0) = omega(3, 2) = -1.0;
  const Eigen::EigenSolver<Eigen::Matrix4d> solver(omega * cov, false);
  Eigen::Vector4d nu = solver.eigenvalues().imag().cwiseAbs();
  std::sort(nu.data(), nu.data() + 4);
  return {nu[0], nu[2]};
}

GaussianTwoModeState vacuum_state() { return {}; }

GaussianTwoModeState seed_idler(const GaussianTwoModeState& state, double n_i) {
  if (!std::isfinite(n_i) || n_i < 0.0) throw DomainError("seed photon number must be >= 0");
  if (state.disp[2] != 0.0 || state.disp[3] != 0.0) {
    throw DomainError("seed_idler expects an undisplaced idler");
  }
  GaussianTwoModeState out = state;
  out.disp[2] = std::sqrt(2.0 * n_i);
  return out;
}

GaussianTwoModeState apply_squeezer(const GaussianTwoModeState& state, double gain) {
  if (!std::isfinite(gain)) throw DomainError("squeezer gain must be finite");
  const double c = std::cosh(gain);
  const double s = std::sinh(gain);
  Eigen::Matrix4d sym;
  // clang-format off
  sym << c,  0., s,  0.,
         0., c,  0., -s,
         s,  0., c,  0.,
         0., -s, 0., c;
  // clang-format on
  return transform(state, sym);
}

GaussianTwoModeState apply_phase(const GaussianTwoModeState& state, double theta, Mode target) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix4d rot = Eigen::Matrix4d::Identity();
  const int o = offset(target);
  rot(o, o) = c;
  rot(o, o + 1) = s;
  rot(o + 1, o) = -s;
  rot(o + 1, o + 1) = c;
  return transform(state, rot);
}

GaussianTwoModeState apply_loss(const GaussianTwoModeState& state, double t_s, double t_i) {
  if (!(t_s >= 0.0 && t_s <= 1.0) || !(t_i >= 0.0 && t_i <= 1.0)) {
    throw DomainError("transmission must lie in [0,1]");
  }
  const Eigen::Vector4d t(t_s, t_s, t_i, t_i);
  GaussianTwoModeState out = transform(state, t.asDiagonal().toDenseMatrix());
  // vacuum admixed through the unused beamsplitter port
  for (int k = 0; k < 4; ++k) out.cov(k, k) += 0.5 * (1.0 - t[k] * t[k]);
  return out;
}

PhotonStats photon_stats(const GaussianTwoModeState& state, Mode mode) {
  const Eigen::Matrix2d v = state.reduced_cov(mode);
  const Eigen::Vector2d d = state.reduced_disp(mode);
  PhotonStats stats;
  stats.mean = 0.5 * (v.trace() - 1.0) + 0.5 * d.squaredNorm();
  stats.variance = 0.5 * (v * v).trace() + d.dot(v * d) - 0.25;
  return stats;
}

GaussianTwoModeState run_interferometer(const InterferometerConfig& cfg, PipelineStage stop) {
  cfg.validate();
  GaussianTwoModeState st = seed_idler(vacuum_state(), cfg.n_i);
  if (stop == PipelineStage::AfterSeed) return st;
  st = apply_squeezer(st, cfg.g1);
  if (stop == PipelineStage::AfterOpa1) return st;
  st = apply_loss(st, cfg.t_s, cfg.t_i);
  if (stop == PipelineStage::AfterLoss) return st;
  st = apply_phase(st, cfg.theta, Mode::Signal);
  if (stop == PipelineStage::AfterPhase) return st;
  return apply_squeezer(st, cfg.g2);
}

}  // namespace su11
