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

#include "ensemble.hpp"

#include <algorithm>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "baselines.hpp"
#include "error.hpp"
#include "noise.hpp"

namespace qwalk {

namespace {

struct RunOutput {
  std::vector<double> m1;
  std::vector<double> m2;
  std::vector<DistributionSnapshot> snaps;
};

RunOutput run_one(const EnsembleSpec& spec, const std::vector<int>& snap_times, int run_index) {
  RandomStream stream = derive_run_stream(spec.seed, static_cast<std::uint64_t>(run_index));
  WalkerState state(spec.init, spec.t_end);
  const std::size_t width = static_cast<std::size_t>(2 * spec.t_end + 1);

  RunOutput out;
  out.m1.resize(static_cast<std::size_t>(spec.t_end + 1));
  out.m2.resize(out.m1.size());
  out.snaps.resize(snap_times.size());

  for (std::size_t s = 0; s < snap_times.size(); ++s) {
    out.snaps[s].t = snap_times[s];
    out.snaps[s].t_max = spec.t_end;
  }
  std::size_t next_snap = 0;
  const NoiseConfig noise{spec.strength, spec.seed};
  const DecoherenceConfig decoherence{spec.strength};
  for (int t = 0;; ++t) {
    const auto m = moments(state);
    out.m1[static_cast<std::size_t>(t)] = m.mean;
    out.m2[static_cast<std::size_t>(t)] = m.second;
    while (next_snap < snap_times.size() && snap_times[next_snap] == t) {
      out.snaps[next_snap].probs.resize(width);
      distribution_into(state, out.snaps[next_snap].probs);
      ++next_snap;
    }
    if (t == spec.t_end) break;
    if (spec.channel == Channel::unitary_noise) {
      state.step(noisy_coin(stream, noise));
    } else {
      decoherent_step(state, stream, decoherence);
    }
  }
  return out;
}

}  // namespace

EnsembleResult run_ensemble(const EnsembleSpec& spec) {
  if (spec.t_end < 1) throw Error(ErrorCode::invalid_argument, "ensemble t_end must be >= 1");
  if (spec.runs < 1) throw Error(ErrorCode::invalid_argument, "ensemble needs at least one run");
  std::vector<int> snap_times = spec.snapshot_times;
  std::sort(snap_times.begin(), snap_times.end());
  snap_times.erase(std::unique(snap_times.begin(), snap_times.end()), snap_times.end());
  for (int t : snap_times) {
    if (t < 0 || t > spec.t_end) {
      throw Error(ErrorCode::invalid_argument, "snapshot time outside the simulated range");
    }
  }

  const std::size_t steps = static_cast<std::size_t>(spec.t_end + 1);
  std::vector<double> sum_m1(steps, 0.0), sum_m2(steps, 0.0);
  std::vector<EnsembleAccumulator> sum_snaps(snap_times.size());

  std::mutex mutex;
  std::map<int, RunOutput> pending;
  int next_to_fold = 0;
  std::exception_ptr failure;

  auto fold_ready = [&] {
    // Caller holds the mutex.
    for (auto it = pending.find(next_to_fold); it != pending.end();
         it = pending.find(next_to_fold)) {
      const RunOutput& run = it->second;
      for (std::size_t i = 0; i < steps; ++i) {
        sum_m1[i] += run.m1[i];
        sum_m2[i] += run.m2[i];
      }
      for (std::size_t s = 0; s < sum_snaps.size(); ++s) sum_snaps[s].add(run.snaps[s]);
      pending.erase(it);
      ++next_to_fold;
    }
  };

  const int workers = std::clamp(spec.workers, 1, spec.runs);
  auto worker = [&](int id) {
    try {
      for (int r = id; r < spec.runs; r += workers) {
        RunOutput run = run_one(spec, snap_times, r);
        std::lock_guard lock(mutex);
        if (failure) return;
        pending.emplace(r, std::move(run));
        fold_ready();
      }
    } catch (...) {
      std::lock_guard lock(mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int id = 0; id < workers; ++id) pool.emplace_back(worker, id);
  }
  if (failure) std::rethrow_exception(failure);

  EnsembleResult result;
  result.runs = spec.runs;
  const double inv = 1.0 / static_cast<double>(spec.runs);
  for (std::size_t i = 0; i < steps; ++i) {
    result.moments.push_back(static_cast<int>(i), sum_m1[i] * inv, sum_m2[i] * inv);
  }
  for (const auto& acc : sum_snaps) result.snapshots.push_back(acc.result());
  return result;
}

}  // namespace qwalk
