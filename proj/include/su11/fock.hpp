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

#include <complex>
#include <vector>

#include "su11/config.hpp"
#include "su11/gaussian.hpp"

namespace su11::fock {

using Complex = std::complex<double>;

/// Truncated two-mode Fock state over photon numbers (n_s, n_i) < cutoff.
///
/// Starts as a pure amplitude table of D*D entries. The first lossy
/// operation switches it to a density operator of D^4 entries indexed
/// [(n_s, n_i), (m_s, m_i)]; it never switches back.
class FockTwoModeState {
 public:
  static FockTwoModeState vacuum(int cutoff);

  int cutoff() const { return cutoff_; }
  bool is_pure() const { return pure_; }

  /// Flat index of |n_s, n_i>.
  std::size_t index(int n_s, int n_i) const {
    return static_cast<std::size_t>(n_s) * cutoff_ + static_cast<std::size_t>(n_i);
  }
  std::size_t dim() const { return static_cast<std::size_t>(cutoff_) * cutoff_; }

  /// Pure-state amplitude; throws std::logic_error on a mixed state.
  Complex amplitude(int n_s, int n_i) const;
  /// Diagonal element of the density matrix (|amplitude|^2 when pure).
  double probability(int n_s, int n_i) const;
  double trace() const;
  /// Probability with either photon number in the top two shells.
  double tail_population() const;

  /// Converts to density form in place. No-op if already mixed.
  void make_mixed();

  std::vector<Complex>& amplitudes() { return amp_; }
  const std::vector<Complex>& amplitudes() const { return amp_; }
  std::vector<Complex>& density() { return rho_; }
  const std::vector<Complex>& density() const { return rho_; }

 private:
  FockTwoModeState(int cutoff) : cutoff_(cutoff) {}

  int cutoff_ = 0;
  bool pure_ = true;
  std::vector<Complex> amp_;
  std::vector<Complex> rho_;
};

/// Tail population above which squeeze and displacement report overflow.
inline constexpr double kTailTolerance = 1e-10;

/// exp[G (a_s^dagger a_i^dagger - a_s a_i)] by scaled-and-squared series on
/// each photon-difference block. Requires 0 <= G <= 0.5.
/// Throws TruncationError if the result overflows the cutoff.
FockTwoModeState fock_squeeze(const FockTwoModeState& state, double gain);

/// Phase rotation exp(-i theta n) on one mode, the same sense as the
/// Gaussian engine's rotation (a -> a e^{-i theta}).
FockTwoModeState fock_phase(const FockTwoModeState& state, double theta,
                            Mode target = Mode::Signal);

/// Attenuation channel with amplitude transmission t, applied by Kraus
/// operators K_k = sum_n sqrt(C(n,k)) t^(n-k) (1-t^2)^(k/2) |n-k><n|.
FockTwoModeState fock_loss(const FockTwoModeState& state, double t, Mode mode);

/// Displacement operator exp(alpha a^dagger - conj(alpha) a) on one mode.
/// Requires |alpha|^2 <= 8. Throws TruncationError on cutoff overflow.
FockTwoModeState fock_displace(const FockTwoModeState& state, Complex alpha, Mode mode);

/// Photon-number moments by direct summation over the diagonal.
PhotonStats fock_photon_stats(const FockTwoModeState& state, Mode mode);

struct FockOptions {
  int cutoff = 40;
  int max_cutoff = 128;
};

/// Result of one oracle pipeline run, with the cutoff that was finally used.
struct FockRun {
  PhotonStats signal;
  PhotonStats idler;
  int cutoff = 0;
  double trace = 1.0;
};

/// displace(sqrt(n_i), idler) -> squeeze(G1) -> loss -> phase -> squeeze(G2).
/// Restricted to G1, G2 <= 0.3 and n_i <= 4. Doubles the cutoff (capped at
/// max_cutoff) whenever an operation overflows it.
FockRun fock_pipeline_run(const InterferometerConfig& cfg, const FockOptions& opts = {});

/// Signal photon statistics of fock_pipeline_run.
PhotonStats fock_pipeline(const InterferometerConfig& cfg, const FockOptions& opts = {});

}  // namespace su11::fock
