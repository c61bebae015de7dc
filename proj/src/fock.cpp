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

#include "su11/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace su11::fock {

namespace {

// Dense row-major square matrix, only what the series exponential needs.
template <typename T>
struct DenseT {
  int n = 0;
  std::vector<T> a;

  explicit DenseT(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}
  T& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  T operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

  static DenseT identity(int size) {
    DenseT m(size);
    for (int i = 0; i < size; ++i) m(i, i) = 1.0;
    return m;
  }
};

using Dense = DenseT<Complex>;
using RealDense = DenseT<double>;

template <typename T>
DenseT<T> multiply(const DenseT<T>& x, const DenseT<T>& y) {
  DenseT<T> z(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int k = 0; k < x.n; ++k) {
      const T xik = x(i, k);
      if (xik == T{}) continue;
      for (int j = 0; j < x.n; ++j) z(i, j) += xik * y(k, j);
    }
  }
  return z;
}

template <typename T>
double inf_norm(const DenseT<T>& m) {
  double best = 0.0;
  for (int i = 0; i < m.n; ++i) {
    double row = 0.0;
    for (int j = 0; j < m.n; ++j) row += std::abs(m(i, j));
    best = std::max(best, row);
  }
  return best;
}

// exp(A) by scaling to norm <= 1/2, Taylor series to 1e-16 relative, squaring back.
template <typename T>
DenseT<T> expm(DenseT<T> gen) {
  const double norm = inf_norm(gen);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const double scale = std::ldexp(1.0, -squarings);
  for (auto& v : gen.a) v *= scale;

  DenseT<T> result = DenseT<T>::identity(gen.n);
  DenseT<T> term = DenseT<T>::identity(gen.n);
  for (int k = 1; k < 60; ++k) {
    term = multiply(term, gen);
    for (auto& v : term.a) v /= static_cast<double>(k);
    for (std::size_t i = 0; i < result.a.size(); ++i) result.a[i] += term.a[i];
    if (inf_norm(term) < 1e-16) break;
  }
  for (int s = 0; s < squarings; ++s) result = multiply(result, result);
  return result;
}

// Flat indices of all |n_s, n_i> with n_s - n_i == diff, ordered by min(n_s, n_i).
std::vector<std::size_t> sector_members(const FockTwoModeState& st, int diff) {
  std::vector<std::size_t> idx;
  const int d = st.cutoff();
  const int shift = std::abs(diff);
  for (int n = 0; n + shift < d; ++n) {
    idx.push_back(diff >= 0 ? st.index(n + shift, n) : st.index(n, n + shift));
  }
  return idx;
}

// Two-mode squeeze restricted to one photon-difference sector.
RealDense squeeze_block(int size, int shift, double gain) {
  RealDense gen(size);
  for (int n = 0; n + 1 < size; ++n) {
    const double w = gain * std::sqrt(static_cast<double>(n + shift + 1) * (n + 1));
    gen(n + 1, n) = w;
    gen(n, n + 1) = -w;
  }
  return expm(std::move(gen));
}

// Single-mode operator acting on `mode` of a two-mode state.
FockTwoModeState apply_local(const FockTwoModeState& in, const Dense& op, Mode mode) {
  FockTwoModeState out = in;
  const int d = in.cutoff();
  auto at = [&](int local, int other) {
    return mode == Mode::Signal ? in.index(local, other) : in.index(other, local);
  };
  if (in.is_pure()) {
    auto& amp = out.amplitudes();
    std::fill(amp.begin(), amp.end(), Complex{});
    for (int other = 0; other < d; ++other) {
      for (int r = 0; r < d; ++r) {
        Complex acc{};
        for (int c = 0; c < d; ++c) acc += op(r, c) * in.amplitudes()[at(c, other)];
        amp[at(r, other)] = acc;
      }
    }
    return out;
  }
  // rho -> (op (x) 1) rho (op (x) 1)^dagger, ket side then bra side
  const std::size_t dim = in.dim();
  std::vector<Complex> half(dim * dim);
  const auto& rho = in.density();
  for (int other = 0; other < d; ++other) {
    for (int r = 0; r < d; ++r) {
      Complex* dst = &half[at(r, other) * dim];
      for (int c = 0; c < d; ++c) {
        const Complex w = op(r, c);
        if (w == Complex{}) continue;
        const Complex* src = &rho[at(c, other) * dim];
        for (std::size_t b = 0; b < dim; ++b) dst[b] += w * src[b];
      }
    }
  }
  auto& res = out.density();
  std::vector<Complex> buf(d);
  for (std::size_t row = 0; row < dim; ++row) {
    const Complex* src = &half[row * dim];
    Complex* dst = &res[row * dim];
    for (int other = 0; other < d; ++other) {
      for (int c = 0; c < d; ++c) buf[c] = src[at(c, other)];
      for (int r = 0; r < d; ++r) {
        Complex acc{};
        for (int c = 0; c < d; ++c) acc += std::conj(op(r, c)) * buf[c];
        dst[at(r, other)] = acc;
      }
    }
  }
  return out;
}

void check_tail(const FockTwoModeState& st, const char* op) {
  const double tail = st.tail_population();
  if (tail > kTailTolerance) {
    throw TruncationError(std::string(op) + ": tail population " + std::to_string(tail) +
                          " exceeds tolerance at cutoff " + std::to_string(st.cutoff()));
  }
}

}  // namespace

FockTwoModeState FockTwoModeState::vacuum(int cutoff) {
  if (cutoff < 3) throw DomainError("Fock cutoff must be at least 3");
  FockTwoModeState st(cutoff);
  st.amp_.assign(st.dim(), Complex{});
  st.amp_[0] = 1.0;
  return st;
}

Complex FockTwoModeState::amplitude(int n_s, int n_i) const {
  if (!pure_) throw std::logic_error("amplitude() on a mixed Fock state");
  return amp_[index(n_s, n_i)];
}

double FockTwoModeState::probability(int n_s, int n_i) const {
  const std::size_t k = index(n_s, n_i);
  return pure_ ? std::norm(amp_[k]) : rho_[k * dim() + k].real();
}

double FockTwoModeState::trace() const {
  double tr = 0.0;
  for (int s = 0; s < cutoff_; ++s)
    for (int i = 0; i < cutoff_; ++i) tr += probability(s, i);
  return tr;
}

double FockTwoModeState::tail_population() const {
  double tail = 0.0;
  for (int s = 0; s < cutoff_; ++s)
    for (int i = 0; i < cutoff_; ++i)
      if (s >= cutoff_ - 2 || i >= cutoff_ - 2) tail += probability(s, i);
  return tail;
}

void FockTwoModeState::make_mixed() {
  if (!pure_) return;
  const std::size_t n = dim();
  rho_.assign(n * n, Complex{});
  for (std::size_t r = 0; r < n; ++r) {
    if (amp_[r] == Complex{}) continue;
    for (std::size_t c = 0; c < n; ++c) rho_[r * n + c] = amp_[r] * std::conj(amp_[c]);
  }
  amp_.clear();
  amp_.shrink_to_fit();
  pure_ = false;
}

FockTwoModeState fock_squeeze(const FockTwoModeState& state, double gain) {
  if (!(gain >= 0.0 && gain <= 0.5)) throw DomainError("fock_squeeze requires 0 <= G <= 0.5");
  if (gain == 0.0) return state;
  const int d = state.cutoff();
  FockTwoModeState out = state;

  std::vector<std::vector<std::size_t>> members;
  std::vector<RealDense> blocks;
  for (int diff = -(d - 1); diff <= d - 1; ++diff) {
    members.push_back(sector_members(state, diff));
    blocks.push_back(squeeze_block(static_cast<int>(members.back().size()), std::abs(diff), gain));
  }

  if (state.is_pure()) {
    const auto& in = state.amplitudes();
    auto& amp = out.amplitudes();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& idx = members[b];
      const RealDense& u = blocks[b];
      for (int r = 0; r < u.n; ++r) {
        Complex acc{};
        for (int c = 0; c < u.n; ++c) acc += u(r, c) * in[idx[c]];
        amp[idx[r]] = acc;
      }
    }
    check_tail(out, "fock_squeeze");
    return out;
  }

  const std::size_t dim = state.dim();
  const auto& rho = state.density();
  std::vector<Complex> half(dim * dim);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& idx = members[b];
    const RealDense& u = blocks[b];
    for (int r = 0; r < u.n; ++r) {
      // complex rows viewed as interleaved doubles so the real scaling vectorizes
      double* dst = reinterpret_cast<double*>(&half[idx[r] * dim]);
      for (int c = 0; c < u.n; ++c) {
        const double w = u(r, c);
        const double* src = reinterpret_cast<const double*>(&rho[idx[c] * dim]);
        for (std::size_t k = 0; k < 2 * dim; ++k) dst[k] += w * src[k];
      }
    }
  }
  auto& res = out.density();
  std::vector<Complex> buf(d);
  for (std::size_t row = 0; row < dim; ++row) {
    const Complex* src = &half[row * dim];
    Complex* dst = &res[row * dim];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& idx = members[b];
      const RealDense& u = blocks[b];
      for (int c = 0; c < u.n; ++c) buf[c] = src[idx[c]];
      for (int r = 0; r < u.n; ++r) {
        Complex acc{};
        for (int c = 0; c < u.n; ++c) acc += u(r, c) * buf[c];
        dst[idx[r]] = acc;
      }
    }
  }
  check_tail(out, "fock_squeeze");
  return out;
}

FockTwoModeState fock_phase(const FockTwoModeState& state, double theta, Mode target) {
  FockTwoModeState out = state;
  const int d = state.cutoff();
  auto photons = [&](std::size_t flat) {
    const int n_s = static_cast<int>(flat / d);
    const int n_i = static_cast<int>(flat % d);
    return target == Mode::Signal ? n_s : n_i;
  };
  if (state.is_pure()) {
    auto& amp = out.amplitudes();
    for (std::size_t k = 0; k < amp.size(); ++k) amp[k] *= std::polar(1.0, -theta * photons(k));
    return out;
  }
  const std::size_t dim = state.dim();
  std::vector<Complex> factor(2 * d - 1);  // indexed by photon difference + d - 1
  for (int k = 0; k < 2 * d - 1; ++k) factor[k] = std::polar(1.0, -theta * (k - d + 1));
  auto& rho = out.density();
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) rho[r * dim + c] *= factor[photons(r) - photons(c) + d - 1];
  return out;
}

FockTwoModeState fock_loss(const FockTwoModeState& state, double t, Mode mode) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("transmission must lie in [0,1]");
  if (t == 1.0) return state;
  FockTwoModeState in = state;
  in.make_mixed();
  const int d = in.cutoff();
  const double r = std::sqrt(1.0 - t * t);

  // kraus[k][n] = <n-k| K_k |n>
  std::vector<std::vector<double>> kraus(d, std::vector<double>(d, 0.0));
  for (int k = 0; k < d; ++k) {
    for (int n = k; n < d; ++n) {
      const double log_binom = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
      kraus[k][n] = std::exp(0.5 * log_binom) * std::pow(t, n - k) * std::pow(r, k);
    }
  }

  FockTwoModeState out = in;
  auto& res = out.density();
  std::fill(res.begin(), res.end(), Complex{});
  const auto& rho = in.density();
  const std::size_t dim = in.dim();
  const std::size_t dd = static_cast<std::size_t>(d);

  // Loop orders keep the innermost index contiguous in memory for either mode.
  if (mode == Mode::Signal) {
    // res[(a,x),(b,y)] += K_k[a] K_k[b] rho[(a+k,x),(b+k,y)]
    for (int a = 0; a < d; ++a) {
      for (int k = 0; a + k < d; ++k) {
        const double ka = kraus[k][a + k];
        if (ka == 0.0) continue;
        for (int b = 0; b + k < d; ++b) {
          const double w = ka * kraus[k][b + k];
          if (w == 0.0) continue;
          for (std::size_t x = 0; x < dd; ++x) {
            double* dst = reinterpret_cast<double*>(&res[(a * dd + x) * dim + b * dd]);
            const double* src = reinterpret_cast<const double*>(&rho[((a + k) * dd + x) * dim + (b + k) * dd]);
            for (std::size_t y = 0; y < 2 * dd; ++y) dst[y] += w * src[y];
          }
        }
      }
    }
    return out;
  }
  // res[(x,a),(y,b)] += K_k[a] K_k[b] rho[(x,a+k),(y,b+k)]
  for (std::size_t x = 0; x < dd; ++x) {
    for (int a = 0; a < d; ++a) {
      for (int k = 0; a + k < d; ++k) {
        const double ka = kraus[k][a + k];
        if (ka == 0.0) continue;
        const double* kb = kraus[k].data() + k;
        for (std::size_t y = 0; y < dd; ++y) {
          Complex* dst = &res[(x * dd + a) * dim + y * dd];
          const Complex* src = &rho[(x * dd + a + k) * dim + y * dd + k];
          for (int b = 0; b + k < d; ++b) dst[b] += (ka * kb[b]) * src[b];
        }
      }
    }
  }
  return out;
}

FockTwoModeState fock_displace(const FockTwoModeState& state, Complex alpha, Mode mode) {
  if (std::norm(alpha) > 8.0 + 1e-12) throw DomainError("fock_displace requires |alpha|^2 <= 8");
  if (alpha == Complex{}) return state;
  const int d = state.cutoff();
  Dense gen(d);
  for (int n = 0; n + 1 < d; ++n) {
    const double s = std::sqrt(static_cast<double>(n + 1));
    gen(n + 1, n) = alpha * s;            // alpha a^dagger
    gen(n, n + 1) = -std::conj(alpha) * s;  // -conj(alpha) a
  }
  FockTwoModeState out = apply_local(state, expm(std::move(gen)), mode);
  check_tail(out, "fock_displace");
  return out;
}

PhotonStats fock_photon_stats(const FockTwoModeState& state, Mode mode) {
  const int d = state.cutoff();
  double m1 = 0.0, m2 = 0.0;
  for (int s = 0; s < d; ++s) {
    for (int i = 0; i < d; ++i) {
      const double p = state.probability(s, i);
      const double n = mode == Mode::Signal ? s : i;
      m1 += n * p;
      m2 += n * n * p;
    }
  }
  return {m1, m2 - m1 * m1};
}

namespace {

FockTwoModeState run_at_cutoff(const InterferometerConfig& cfg, int cutoff) {
  FockTwoModeState st = FockTwoModeState::vacuum(cutoff);
  st = fock_displace(st, Complex{std::sqrt(cfg.n_i), 0.0}, Mode::Idler);
  st = fock_squeeze(st, cfg.g1);
  st = fock_loss(st, cfg.t_s, Mode::Signal);
  st = fock_loss(st, cfg.t_i, Mode::Idler);
  st = fock_phase(st, cfg.theta, Mode::Signal);
  return fock_squeeze(st, cfg.g2);
}

}  // namespace

FockRun fock_pipeline_run(const InterferometerConfig& cfg, const FockOptions& opts) {
  cfg.validate();
  if (cfg.g1 > 0.3 || cfg.g2 > 0.3 || cfg.n_i > 4.0) {
    throw DomainError("fock_pipeline is limited to G1, G2 <= 0.3 and n_i <= 4");
  }
  int cutoff = std::min(opts.cutoff, opts.max_cutoff);
  for (;;) {
    try {
      const FockTwoModeState st = run_at_cutoff(cfg, cutoff);
      return {fock_photon_stats(st, Mode::Signal), fock_photon_stats(st, Mode::Idler), cutoff,
              st.trace()};
    } catch (const TruncationError&) {
      if (cutoff >= opts.max_cutoff) throw;
      cutoff = std::min(2 * cutoff, opts.max_cutoff);
    }
  }
}

PhotonStats fock_pipeline(const InterferometerConfig& cfg, const FockOptions& opts) {
  return fock_pipeline_run(cfg, opts).signal;
}

}  // namespace su11::fock
