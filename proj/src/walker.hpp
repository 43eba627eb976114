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

#pragma once

#include <array>
#include <complex>
#include <span>
#include <variant>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;

/// 2x2 operator on the chirality qubit in the (|R>, |L>) basis, row-major.
struct CoinMatrix {
  std::array<Complex, 4> m{};

  constexpr Complex operator()(int row, int col) const { return m[2 * row + col]; }
  Complex& operator()(int row, int col) { return m[2 * row + col]; }

  static CoinMatrix identity() { return {{1.0, 0.0, 0.0, 1.0}}; }

  CoinMatrix operator*(const CoinMatrix& rhs) const;
  CoinMatrix adjoint() const;
  Complex determinant() const;

  /// Largest entrywise deviation of M^dagger M from the identity.
  double unitarity_defect() const;
  bool is_unitary(double tol = 1e-12) const { return unitarity_defect() <= tol; }
};

/// Largest entrywise modulus of (a - b).
double max_abs_diff(const CoinMatrix& a, const CoinMatrix& b);

struct SymmetricOrigin {
  bool operator==(const SymmetricOrigin&) const = default;
};
struct RightOrigin {
  bool operator==(const RightOrigin&) const = default;
};
struct CustomOrigin {
  Complex c_r;
  Complex c_l;
  bool operator==(const CustomOrigin&) const = default;
};

/// Every variant puts the walker at n = 0.
using InitialCondition = std::variant<SymmetricOrigin, RightOrigin, CustomOrigin>;

/// Chirality amplitudes (c_R, c_L) at the origin for an initial condition.
std::array<Complex, 2> origin_amplitudes(const InitialCondition& init);

/// Position distribution P_t(n) over n = -t_max..t_max.
struct DistributionSnapshot {
  int t = 0;
  int t_max = 0;
  std::vector<double> probs;
  int runs_averaged = 1;

  double at(int n) const {
    return (n < -t_max || n > t_max) ? 0.0 : probs[static_cast<std::size_t>(n + t_max)];
  }
  double total() const;
};

/// Walker on sites n = -t_max..t_max with two chirality components.
///
/// Amplitudes are stored densely with one zero guard cell on each side so the
/// shift never needs a bounds branch. Stepping is out-of-place into a second
/// buffer pair that is then swapped in.
class WalkerState {
 public:
  WalkerState(const InitialCondition& init, int t_max);

  int time() const { return t_; }
  int capacity() const { return t_max_; }

  Complex amp_r(int n) const { return in_range(n) ? r_[index(n)] : Complex{}; }
  Complex amp_l(int n) const { return in_range(n) ? l_[index(n)] : Complex{}; }

  /// Amplitudes for n = -t_max..t_max.
  std::span<const Complex> right() const { return {r_.data() + 1, width()}; }
  std::span<const Complex> left() const { return {l_.data() + 1, width()}; }

  /// Coin on every site, then R moves to n+1 and L to n-1.
  void step(const CoinMatrix& coin);

  double norm_squared() const;

  /// True while every site with n + t odd is known to hold zero amplitude,
  /// which lets step() and the moment sums skip those sites.
  bool parity_aligned() const { return parity_aligned_; }

  /// Scales all amplitudes; used by measurement collapse.
  void scale(double factor);
  void clear_right();
  void clear_left();
  double right_weight() const;

  /// Sets amplitudes directly at time t; only for oracles and tests. The
  /// support must lie inside |n| <= t.
  void assign(int t, std::span<const Complex> right, std::span<const Complex> left);

 private:
  bool in_range(int n) const { return n >= -t_max_ && n <= t_max_; }
  std::size_t index(int n) const { return static_cast<std::size_t>(n + t_max_ + 1); }
  std::size_t width() const { return static_cast<std::size_t>(2 * t_max_ + 1); }

  int t_ = 0;
  int t_max_ = 0;
  bool parity_aligned_ = true;
  std::vector<Complex> r_, l_;
  std::vector<Complex> r_next_, l_next_;
};

CoinMatrix hadamard_coin();

/// exp(i (a1 sigma_1 + a2 sigma_2 + a3 sigma_3)) in closed form.
CoinMatrix su2_exponential(double a1, double a2, double a3);

/// Hadamard * noise_rotation: the noise acts first, then the Hadamard.
CoinMatrix compose_coin(const CoinMatrix& noise_rotation);

WalkerState new_state(const InitialCondition& init, int t_max);
WalkerState step(WalkerState state, const CoinMatrix& coin);
DistributionSnapshot distribution(const WalkerState& state);

/// Writes P_t(n) into out (length 2 t_max + 1) without allocating.
void distribution_into(const WalkerState& state, std::span<double> out);

}  // namespace qwalk
