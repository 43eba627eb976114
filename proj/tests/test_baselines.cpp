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

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "analysis.hpp"
#include "baselines.hpp"
#include "doctest.h"
#include "error.hpp"
#include "oracles.hpp"

using namespace qwalk;

namespace {

// Exact density-matrix evolution of the measured-coin walk on sites -T..T.
// Basis index 2 (n + T) + s with s = 0 for R and 1 for L.
class DensityWalk {
 public:
  DensityWalk(int t_max, double p) : T_(t_max), D_(2 * (2 * t_max + 1)), p_(p), rho_(D_ * D_) {
    rho_[idx(0, 0) * D_ + idx(0, 0)] = 1.0;  // |0,R><0,R|
  }

  void step() {
    apply_left();
    adjoint();
    apply_left();
    adjoint();
    // (1 - p) rho + p (P_R rho P_R + P_L rho P_L)
    for (std::size_t i = 0; i < D_; ++i)
      for (std::size_t j = 0; j < D_; ++j)
        if ((i & 1) != (j & 1)) rho_[i * D_ + j] *= 1.0 - p_;
  }

  double prob(int n) const {
    const auto r = idx(n, 0), l = idx(n, 1);
    return rho_[r * D_ + r].real() + rho_[l * D_ + l].real();
  }

  FirstSecondMoments moments() const {
    FirstSecondMoments m;
    for (int n = -T_; n <= T_; ++n) {
      m.mean += n * prob(n);
      m.second += double(n) * n * prob(n);
    }
    return m;
  }

 private:
  std::size_t idx(int n, int s) const { return static_cast<std::size_t>(2 * (n + T_) + s); }

  // rho <- U rho, U = shift * (I x H)
  void apply_left() {
    const double h = 1.0 / std::sqrt(2.0);
    std::vector<std::complex<double>> out(D_ * D_);
    for (int n = -T_; n <= T_; ++n) {
      const auto r = idx(n, 0), l = idx(n, 1);
      for (std::size_t c = 0; c < D_; ++c) {
        const auto a = rho_[r * D_ + c], b = rho_[l * D_ + c];
        if (a == 0.0 && b == 0.0) continue;
        out[idx(n + 1, 0) * D_ + c] += h * (a + b);
        out[idx(n - 1, 1) * D_ + c] += h * (a - b);
      }
    }
    rho_.swap(out);
  }

  void adjoint() {
    for (std::size_t i = 0; i < D_; ++i) {
      rho_[i * D_ + i] = std::conj(rho_[i * D_ + i]);
      for (std::size_t j = i + 1; j < D_; ++j) {
        const auto a = rho_[i * D_ + j];
        rho_[i * D_ + j] = std::conj(rho_[j * D_ + i]);
        rho_[j * D_ + i] = std::conj(a);
      }
    }
  }

  int T_;
  std::size_t D_;
  double p_;
  std::vector<std::complex<double>> rho_;
};

}  // namespace

TEST_CASE("classical distribution small cases") {
  const auto p1 = classical_distribution(1);
  CHECK(p1.at(1) == 0.5);
  CHECK(p1.at(-1) == 0.5);
  CHECK(p1.at(0) == 0.0);
  const auto p2 = classical_distribution(2);
  CHECK(p2.at(0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(p2.at(2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(p2.at(-2) == doctest::Approx(0.25).epsilon(1e-15));
  const auto p0 = classical_distribution(0);
  CHECK(p0.at(0) == 1.0);
  CHECK_THROWS_AS(classical_distribution(-1), Error);
}

TEST_CASE("classical distribution matches the binomial oracle") {
  for (int t : {3, 17, 100, 999, 5000}) {
    const auto p = classical_distribution(t);
    double worst = 0.0;
    for (int n = -t; n <= t; ++n) {
      const double ref = oracle::binomial(t, n);
      if (ref > 1e-200) worst = std::max(worst, std::abs(p.at(n) - ref) / ref);
      else REQUIRE(p.at(n) < 1e-190);
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("property: classical distribution mass, mean and variance") {
  for (int t : {1, 2, 5, 10, 64, 100, 333, 1000, 4096, 10000, 100000}) {
    const auto p = classical_distribution(t);
    const auto m = moments(p);
    CHECK(std::abs(p.total() - 1.0) < 1e-12);
    CHECK(std::abs(m.mean) < 1e-9);
    CHECK(std::abs(m.second - t) < (t <= 10000 ? 1e-9 : 1e-12 * t));
    for (int n = -t; n <= t; ++n)
      if ((n + t) % 2 != 0) REQUIRE(p.at(n) == 0.0);
  }
}

TEST_CASE("classical distribution with a wider capacity") {
  const auto p = classical_distribution(4, 10);
  CHECK(p.t == 4);
  CHECK(p.t_max == 10);
  CHECK(p.at(0) == doctest::Approx(6.0 / 16));
  CHECK(p.at(8) == 0.0);
  CHECK(classical_distribution(5, 4).t_max == 5);
}

TEST_CASE("gaussian density") {
  CHECK(gaussian_density(0, 1, 0.5) == doctest::Approx(1 / std::sqrt(2 * std::numbers::pi)).epsilon(1e-15));
  CHECK(gaussian_density(3.5, 7, 0.3) == gaussian_density(-3.5, 7, 0.3));
  CHECK_THROWS_AS(gaussian_density(0, 0, 0.5), Error);
  CHECK_THROWS_AS(gaussian_density(0, 1, 0), Error);
  CHECK_THROWS_AS(gaussian_density(0, -1, 0.5), Error);

  // The continuum limit is within 2% of the binomial out to |n| = 28 at
  // t = 100. At |n| = 30 the binomial itself sits 2.6% below it, which the
  // lgamma oracle confirms independently.
  const auto p = classical_distribution(100);
  for (int n = -28; n <= 28; n += 2) {
    const double g = 2 * gaussian_density(n, 100, 0.5);
    CHECK(std::abs(g - p.at(n)) / p.at(n) < 0.02);
  }
  for (int n : {-30, 30}) {
    const double gap = 2 * gaussian_density(n, 100, 0.5) / p.at(n) - 1.0;
    const double oracle_gap = 2 * gaussian_density(n, 100, 0.5) / oracle::binomial(100, n) - 1.0;
    CHECK(gap == doctest::Approx(oracle_gap).epsilon(1e-9));
    CHECK(gap > 0.02);
  }
}

TEST_CASE("analytic decoherence references") {
  CHECK(analytic_np(1.0) == 0.0);
  CHECK(analytic_np(0.1) == doctest::Approx(0.81 / 0.19).epsilon(1e-14));
  CHECK(analytic_np(0.01) == doctest::Approx(49.25).epsilon(1e-3));
  CHECK(analytic_Kp(1.0) == 1.0);
  CHECK(analytic_Kp(0.1) == doctest::Approx(3.086).epsilon(1e-3));
  CHECK(std::abs(analytic_Kp(0.01) * std::sqrt(0.01) - 1.0) < 0.015);
  CHECK_THROWS_AS(analytic_np(0.0), Error);
  CHECK_THROWS_AS(analytic_Kp(0.0), Error);
  CHECK_THROWS_AS(analytic_Kp(1.5), Error);
  double prev_n = 1e300, prev_k = 1e300;
  for (double p = 0.001; p <= 1.0; p += 0.001) {
    REQUIRE(analytic_np(p) < prev_n);
    REQUIRE(analytic_Kp(p) < prev_k);
    prev_n = analytic_np(p);
    prev_k = analytic_Kp(p);
  }
}

TEST_CASE("exact decohered map reproduces the closed forms") {
  // The approach to the plateau is geometric; at p = 0.1 the residual after
  // 200 steps is about 1e-5 relative, at p = 0.5 after 80 steps far below.
  struct Case {
    double p;
    int steps;
    double tol;
  };
  for (const Case c : {Case{0.1, 200, 1e-4}, Case{0.5, 80, 1e-9}}) {
    DensityWalk rho(c.steps, c.p);
    double prev_var = 0.0;
    double last_increment = 0.0;
    for (int t = 1; t <= c.steps; ++t) {
      rho.step();
      const auto m = rho.moments();
      const double var = m.second - m.mean * m.mean;
      last_increment = var - prev_var;
      prev_var = var;
    }
    const auto m = rho.moments();
    CHECK(m.mean == doctest::Approx(analytic_np(c.p)).epsilon(c.tol));
    // variance grows by K(p)^2 per step at long times
    CHECK(last_increment == doctest::Approx(analytic_Kp(c.p) * analytic_Kp(c.p)).epsilon(c.tol));
  }
}

TEST_CASE("fully measured walk is the classical walk") {
  DensityWalk rho(30, 1.0);
  for (int t = 0; t < 30; ++t) rho.step();
  const auto c = classical_distribution(30);
  for (int n = -30; n <= 30; ++n) CHECK(std::abs(rho.prob(n) - c.at(n)) < 1e-13);
}

TEST_CASE("decoherent trajectories are unbiased for the exact map") {
  const int t_end = 40;
  const double p = 0.1;
  DensityWalk rho(t_end, p);
  for (int t = 0; t < t_end; ++t) rho.step();
  const auto exact = rho.moments();

  const int runs = 4000;
  double s1 = 0, s1sq = 0, s2 = 0, s2sq = 0;
  for (int r = 0; r < runs; ++r) {
    auto stream = derive_run_stream(77, static_cast<std::uint64_t>(r));
    auto state = new_state(RightOrigin{}, t_end);
    for (int t = 0; t < t_end; ++t) decoherent_step(state, stream, {p});
    REQUIRE(std::abs(state.norm_squared() - 1.0) < 1e-12);
    const auto m = moments(state);
    s1 += m.mean;
    s1sq += m.mean * m.mean;
    s2 += m.second;
    s2sq += m.second * m.second;
  }
  const double mean1 = s1 / runs, mean2 = s2 / runs;
  const double se1 = std::sqrt((s1sq / runs - mean1 * mean1) / runs);
  const double se2 = std::sqrt((s2sq / runs - mean2 * mean2) / runs);
  CHECK(std::abs(mean1 - exact.mean) < 4 * se1);
  CHECK(std::abs(mean2 - exact.second) < 4 * se2);
}

TEST_CASE("decoherent step limits") {
  SUBCASE("p = 0 is the hadamard walk") {
    auto stream = derive_run_stream(1, 1);
    auto a = new_state(RightOrigin{}, 100);
    auto b = new_state(RightOrigin{}, 100);
    for (int t = 0; t < 100; ++t) {
      decoherent_step(a, stream, {0.0});
      b.step(hadamard_coin());
    }
    for (int n = -100; n <= 100; ++n) {
      REQUIRE(a.amp_r(n) == b.amp_r(n));
      REQUIRE(a.amp_l(n) == b.amp_l(n));
    }
  }
  SUBCASE("p = 1 spreads like sqrt(t)") {
    const int t_end = 1000, runs = 1000;
    double m1 = 0, m2 = 0;
    for (int r = 0; r < runs; ++r) {
      auto stream = derive_run_stream(5, static_cast<std::uint64_t>(r));
      auto s = new_state(RightOrigin{}, t_end);
      for (int t = 0; t < t_end; ++t) decoherent_step(s, stream, {1.0});
      const auto m = moments(s);
      m1 += m.mean;
      m2 += m.second;
    }
    m1 /= runs;
    m2 /= runs;
    CHECK(std::abs(std::sqrt(m2 - m1 * m1) / std::sqrt(double(t_end)) - 1.0) < 0.05);
  }
  SUBCASE("invalid p") {
    auto stream = derive_run_stream(1, 1);
    auto s = new_state(RightOrigin{}, 3);
    CHECK_THROWS_AS(decoherent_step(s, stream, {1.2}), Error);
    CHECK_THROWS_AS(decoherent_step(s, stream, {-0.1}), Error);
  }
}

TEST_CASE("path-sum oracle") {
  SUBCASE("t = 0 returns the initial state") {
    const auto s = path_sum_oracle(SymmetricOrigin{}, {});
    CHECK(s.time() == 0);
    CHECK(std::abs(s.amp_l(0) - Complex{0, 1 / std::sqrt(2.0)}) < 1e-15);
  }
  SUBCASE("three hadamard steps") {
    const std::vector<CoinMatrix> coins(3, hadamard_coin());
    const auto p = distribution(path_sum_oracle(RightOrigin{}, coins));
    CHECK(p.at(1) == doctest::Approx(5.0 / 8).epsilon(1e-14));
  }
  SUBCASE("cost guard") {
    const std::vector<CoinMatrix> coins(kPathSumMaxSteps + 1, hadamard_coin());
    CHECK_THROWS_AS(path_sum_oracle(RightOrigin{}, coins), Error);
  }
  SUBCASE("matches the naive reference and iterated stepping") {
    auto stream = derive_run_stream(10, 0);
    std::vector<CoinMatrix> coins;
    for (int k = 0; k < 10; ++k) coins.push_back(noisy_coin(stream, {0.6, 10}));
    const auto via_paths = path_sum_oracle(CustomOrigin{0.8, Complex{0, 0.6}}, coins);
    oracle::Amps ref{{0, {0.8, Complex{0, 0.6}}}};
    auto iterated = new_state(CustomOrigin{0.8, Complex{0, 0.6}}, 10);
    for (const auto& c : coins) {
      ref = oracle::step(ref, c.m);
      iterated.step(c);
    }
    for (int n = -10; n <= 10; ++n) {
      const auto it = ref.find(n);
      const Complex r = it == ref.end() ? Complex{} : it->second.first;
      const Complex l = it == ref.end() ? Complex{} : it->second.second;
      CHECK(std::abs(via_paths.amp_r(n) - r) < 1e-13);
      CHECK(std::abs(via_paths.amp_l(n) - l) < 1e-13);
      CHECK(std::abs(via_paths.amp_r(n) - iterated.amp_r(n)) < 1e-12);
      CHECK(std::abs(via_paths.amp_l(n) - iterated.amp_l(n)) < 1e-12);
    }
  }
}
