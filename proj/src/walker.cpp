// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "walker.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "error.hpp"

namespace qwalk {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

CoinMatrix CoinMatrix::operator*(const CoinMatrix& rhs) const {
  CoinMatrix out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out(i, j) = (*this)(i, 0) * rhs(0, j) + (*this)(i, 1) * rhs(1, j);
    }
  }
  return out;
}

CoinMatrix CoinMatrix::adjoint() const {
  return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

Complex CoinMatrix::determinant() const { return m[0] * m[3] - m[1] * m[2]; }

double CoinMatrix::unitarity_defect() const {
  return max_abs_diff(adjoint() * (*this), identity());
}

double max_abs_diff(const CoinMatrix& a, const CoinMatrix& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k) worst = std::max(worst, std::abs(a.m[k] - b.m[k]));
  return worst;
}

std::array<Complex, 2> origin_amplitudes(const InitialCondition& init) {
  struct Visitor {
    std::array<Complex, 2> operator()(const SymmetricOrigin&) const {
      return {Complex{kInvSqrt2, 0.0}, Complex{0.0, kInvSqrt2}};
    }
    std::array<Complex, 2> operator()(const RightOrigin&) const {
      return {Complex{1.0, 0.0}, Complex{}};
    }
    std::array<Complex, 2> operator()(const CustomOrigin& c) const {
      const double norm = std::norm(c.c_r) + std::norm(c.c_l);
      if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-12) {
        throw Error(ErrorCode::invalid_argument,
                    "custom initial chirality must have unit norm, got |c|^2 = " +
                        std::to_string(norm));
      }
      return {c.c_r, c.c_l};
    }
  };
  return std::visit(Visitor{}, init);
}

double DistributionSnapshot::total() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

WalkerState::WalkerState(const InitialCondition& init, int t_max) : t_max_(t_max) {
  if (t_max < 1) {
    throw Error(ErrorCode::invalid_argument, "t_max must be at least 1");
  }
  const auto amps = origin_amplitudes(init);
  const std::size_t n = width() + 2;
  r_.assign(n, Complex{});
  l_.assign(n, Complex{});
  r_next_.assign(n, Complex{});
  l_next_.assign(n, Complex{});
  r_[index(0)] = amps[0];
  l_[index(0)] = amps[1];
}

void WalkerState::step(const CoinMatrix& coin) {
  if (t_ + 1 > t_max_) {
    throw Error(ErrorCode::capacity_exceeded,
                "step would exceed capacity t_max = " + std::to_string(t_max_));
  }
  const Complex c00 = coin(0, 0), c01 = coin(0, 1);
  const Complex c10 = coin(1, 0), c11 = coin(1, 1);

  // New support is [-(t+1), t+1]; the guard cells keep i-1 and i+1 in bounds.
  // When parity is aligned the skipped sites of the target buffer already hold
  // zeros: they were the odd sites of the state two steps back.
  const std::size_t lo = index(-(t_ + 1));
  const std::size_t hi = index(t_ + 1);
  const std::size_t stride = parity_aligned_ ? 2 : 1;
  // Interleaved (re, im) view of the complex arrays.
  const double* r = reinterpret_cast<const double*>(r_.data());
  const double* l = reinterpret_cast<const double*>(l_.data());
  double* rn = reinterpret_cast<double*>(r_next_.data());
  double* ln = reinterpret_cast<double*>(l_next_.data());
  const double a_re = c00.real(), a_im = c00.imag(), b_re = c01.real(), b_im = c01.imag();
  const double c_re = c10.real(), c_im = c10.imag(), d_re = c11.real(), d_im = c11.imag();
  for (std::size_t i = lo; i <= hi; i += stride) {
    const std::size_t src = 2 * (i - 1), dst = 2 * (i + 1), at = 2 * i;
    const double rs_re = r[src], rs_im = r[src + 1], ls_re = l[src], ls_im = l[src + 1];
    const double rd_re = r[dst], rd_im = r[dst + 1], ld_re = l[dst], ld_im = l[dst + 1];
    rn[at] = a_re * rs_re - a_im * rs_im + b_re * ls_re - b_im * ls_im;
    rn[at + 1] = a_re * rs_im + a_im * rs_re + b_re * ls_im + b_im * ls_re;
    ln[at] = c_re * rd_re - c_im * rd_im + d_re * ld_re - d_im * ld_im;
    ln[at + 1] = c_re * rd_im + c_im * rd_re + d_re * ld_im + d_im * ld_re;
  }
  r_.swap(r_next_);
  l_.swap(l_next_);
  ++t_;
}

double WalkerState::norm_squared() const {
  double sum = 0.0;
  for (std::size_t i = index(-t_); i <= index(t_); ++i) sum += std::norm(r_[i]) + std::norm(l_[i]);
  return sum;
}

void WalkerState::scale(double factor) {
  for (std::size_t i = index(-t_); i <= index(t_); ++i) {
    r_[i] *= factor;
    l_[i] *= factor;
  }
}

void WalkerState::clear_right() {
  std::fill(r_.begin() + static_cast<std::ptrdiff_t>(index(-t_)),
            r_.begin() + static_cast<std::ptrdiff_t>(index(t_)) + 1, Complex{});
}

void WalkerState::clear_left() {
  std::fill(l_.begin() + static_cast<std::ptrdiff_t>(index(-t_)),
            l_.begin() + static_cast<std::ptrdiff_t>(index(t_)) + 1, Complex{});
}

double WalkerState::right_weight() const {
  double sum = 0.0;
  for (std::size_t i = index(-t_); i <= index(t_); ++i) sum += std::norm(r_[i]);
  return sum;
}

void WalkerState::assign(int t, std::span<const Complex> right, std::span<const Complex> left) {
  if (t < 0 || t > t_max_ || right.size() != width() || left.size() != width()) {
    throw Error(ErrorCode::invalid_argument, "amplitude arrays do not match walker capacity");
  }
  for (int n = -t_max_; n <= t_max_; ++n) {
    const auto i = static_cast<std::size_t>(n + t_max_);
    if (std::abs(n) > t && (right[i] != Complex{} || left[i] != Complex{})) {
      throw Error(ErrorCode::invalid_argument, "amplitude outside the light cone |n| <= t");
    }
  }
  std::copy(right.begin(), right.end(), r_.begin() + 1);
  std::copy(left.begin(), left.end(), l_.begin() + 1);
  std::fill(r_next_.begin(), r_next_.end(), Complex{});
  std::fill(l_next_.begin(), l_next_.end(), Complex{});
  t_ = t;
  parity_aligned_ = true;
  for (int n = -t; n <= t; ++n) {
    if (((n + t) & 1) != 0 && (r_[index(n)] != Complex{} || l_[index(n)] != Complex{})) {
      parity_aligned_ = false;
      break;
    }
  }
}

CoinMatrix hadamard_coin() {
  return {{kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}};
}

CoinMatrix su2_exponential(double a1, double a2, double a3) {
  const double r = std::sqrt(a1 * a1 + a2 * a2 + a3 * a3);
  const double c = std::cos(r);
  double sinc;
  if (r < 1e-4) {
    const double r2 = r * r;
    sinc = 1.0 - r2 / 6.0 + r2 * r2 / 120.0;
  } else {
    sinc = std::sin(r) / r;
  }
  const double s1 = sinc * a1, s2 = sinc * a2, s3 = sinc * a3;
  // cos(r) I + i sinc (a1 sx + a2 sy + a3 sz)
  return {{Complex{c, s3}, Complex{s2, s1}, Complex{-s2, s1}, Complex{c, -s3}}};
}

CoinMatrix compose_coin(const CoinMatrix& noise_rotation) {
  return hadamard_coin() * noise_rotation;
}

WalkerState new_state(const InitialCondition& init, int t_max) { return WalkerState(init, t_max); }

WalkerState step(WalkerState state, const CoinMatrix& coin) {
  state.step(coin);
  return state;
}

void distribution_into(const WalkerState& state, std::span<double> out) {
  const auto r = state.right();
  const auto l = state.left();
  if (out.size() != r.size()) {
    throw Error(ErrorCode::invalid_argument, "distribution buffer has wrong length");
  }
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = std::norm(r[i]) + std::norm(l[i]);
}

DistributionSnapshot distribution(const WalkerState& state) {
  DistributionSnapshot snap;
  snap.t = state.time();
  snap.t_max = state.capacity();
  snap.probs.resize(static_cast<std::size_t>(2 * snap.t_max + 1));
  distribution_into(state, snap.probs);
  return snap;
}

}  // namespace qwalk
