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

#include <span>

#include "noise.hpp"
#include "walker.hpp"

namespace qwalk {

struct DecoherenceConfig {
  double p = 0.0;  // per-step probability of measuring the chirality
};

/// Exact binomial distribution of the unbiased classical walk after t steps.
/// The snapshot capacity is max(t_max, t, 1).
DistributionSnapshot classical_distribution(int t, int t_max = 0);

/// Continuum limit (4 pi D t)^(-1/2) exp(-n^2 / (4 D t)).
double gaussian_density(double n, double t, double diffusion);

/// Hadamard step followed, with probability p, by a projective measurement of
/// the chirality on the whole lattice.
void decoherent_step(WalkerState& state, RandomStream& stream, const DecoherenceConfig& config);

/// Saturated first moment (1-p)^2 / (p (2-p)) of the decohered walk.
double analytic_np(double p);

/// Diffusion prefactor sqrt(1 + 2 (1-p)^2 / (p (2-p))) of the decohered walk.
double analytic_Kp(double p);

inline constexpr int kPathSumMaxSteps = 14;

/// Amplitudes after applying coins[0], coins[1], ... by summing over every
/// chirality history. Independent of WalkerState::step; meant for tests.
WalkerState path_sum_oracle(const InitialCondition& init, std::span<const CoinMatrix> coins);

}  // namespace qwalk
