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

#include "baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "error.hpp"

namespace qwalk {

namespace {

void require_probability(double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::domain, "measurement probability must lie in (0, 1], got " +
                                       std::to_string(p));
  }
}

}  // namespace

DistributionSnapshot classical_distribution(int t, int t_max) {
  if (t < 0) throw Error(ErrorCode::invalid_argument, "time must be non-negative");
  DistributionSnapshot snap;
  snap.t = t;
  snap.t_max = std::max({t_max, t, 1});
  snap.probs.assign(static_cast<std::size_t>(2 * snap.t_max + 1), 0.0);

  // Weights relative to the central binomial coefficient, built outward with
  // the ratio C(t, k+1) / C(t, k) = (t - k) / (k + 1) and mirrored. Tails
  // underflow to zero instead of overflowing.
  const int half = t / 2;
  std::vector<double> w(static_cast<std::size_t>(t + 1), 0.0);
  w[static_cast<std::size_t>(half)] = 1.0;
  for (int k = half; k < t; ++k) {
    w[static_cast<std::size_t>(k + 1)] =
        w[static_cast<std::size_t>(k)] * static_cast<double>(t - k) / static_cast<double>(k + 1);
  }
  for (int k = 0; k < half; ++k) w[static_cast<std::size_t>(k)] = w[static_cast<std::size_t>(t - k)];

  double total = 0.0;
  for (double x : w) total += x;
  for (int k = 0; k <= t; ++k) {
    const int n = 2 * k - t;
    snap.probs[static_cast<std::size_t>(n + snap.t_max)] = w[static_cast<std::size_t>(k)] / total;
  }
  return snap;
}

double gaussian_density(double n, double t, double diffusion) {
  if (!(t > 0.0) || !(diffusion > 0.0)) {
    throw Error(ErrorCode::domain, "gaussian_density needs t > 0 and D > 0");
  }
  const double spread = 4.0 * diffusion * t;
  return std::exp(-n * n / spread) / std::sqrt(std::numbers::pi * spread);
}

void decoherent_step(WalkerState& state, RandomStream& stream, const DecoherenceConfig& config) {
  if (!(config.p >= 0.0 && config.p <= 1.0)) {
    throw Error(ErrorCode::invalid_argument, "p must lie in [0, 1]");
  }
  state.step(hadamard_coin());
  if (config.p == 0.0) return;
  if (stream.uniform() >= config.p) return;

  const double total = state.norm_squared();
  const double weight_r = state.right_weight();
  if (stream.uniform() * total < weight_r) {
    state.clear_left();
    state.scale(1.0 / std::sqrt(weight_r));
  } else {
    state.clear_right();
    state.scale(1.0 / std::sqrt(total - weight_r));
  }
}

double analytic_np(double p) {
  require_probability(p);
  return (1.0 - p) * (1.0 - p) / (p * (2.0 - p));
}

double analytic_Kp(double p) {
  require_probability(p);
  return std::sqrt(1.0 + 2.0 * analytic_np(p));
}

WalkerState path_sum_oracle(const InitialCondition& init, std::span<const CoinMatrix> coins) {
  const int steps = static_cast<int>(coins.size());
  if (steps > kPathSumMaxSteps) {
    throw Error(ErrorCode::invalid_argument,
                "path-sum oracle is limited to " + std::to_string(kPathSumMaxSteps) + " steps");
  }
  const auto start = origin_amplitudes(init);
  const int t_max = std::max(steps, 1);
  const std::size_t width = static_cast<std::size_t>(2 * t_max + 1);
  std::vector<Complex> right(width), left(width);

  // Bit k of `history` is the chirality after step k+1 (0 = R, 1 = L).
  const std::uint32_t histories = 1u << steps;
  for (int s0 = 0; s0 < 2; ++s0) {
    if (start[static_cast<std::size_t>(s0)] == Complex{}) continue;
    for (std::uint32_t history = 0; history < histories; ++history) {
      Complex amp = start[static_cast<std::size_t>(s0)];
      int prev = s0;
      int position = 0;
      for (int k = 0; k < steps; ++k) {
        const int next = static_cast<int>((history >> k) & 1u);
        amp *= coins[static_cast<std::size_t>(k)](next, prev);
        position += next == 0 ? 1 : -1;
        prev = next;
      }
      auto& target = prev == 0 ? right : left;
      target[static_cast<std::size_t>(position + t_max)] += amp;
    }
  }

  WalkerState state(RightOrigin{}, t_max);
  state.assign(steps, right, left);
  return state;
}

}  // namespace qwalk
