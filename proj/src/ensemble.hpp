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

#include <cstdint>
#include <vector>

#include "analysis.hpp"
#include "walker.hpp"

namespace qwalk {

enum class Channel { unitary_noise, measurement };

/// One ensemble: `runs` trajectories of the same channel and strength.
struct EnsembleSpec {
  Channel channel = Channel::unitary_noise;
  double strength = 0.0;  // alpha for unitary noise, p for measurement
  InitialCondition init = RightOrigin{};
  int t_end = 1;
  int runs = 1;
  std::vector<int> snapshot_times;
  std::uint64_t seed = 0;
  int workers = 1;
};

struct EnsembleResult {
  MomentSeries moments;  // every t in [0, t_end]
  std::vector<DistributionSnapshot> snapshots;
  int runs = 0;
};

/// Runs trajectories r = 0..runs-1, each on derive_run_stream(seed, r).
///
/// Run indices are dealt round-robin to the workers, and finished runs are
/// folded into the totals strictly in index order, so the result is bitwise
/// independent of the worker count and of completion order.
EnsembleResult run_ensemble(const EnsembleSpec& spec);

}  // namespace qwalk
