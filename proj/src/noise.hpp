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
#include <cstdint>
#include <limits>
#include <random>

#include "walker.hpp"

namespace qwalk {

/// Philox4x32-10 counter-based generator.
///
/// The 64-bit key is the master seed; the upper half of the 128-bit counter
/// is the run index and the lower half counts blocks. Streams for distinct
/// run indices therefore never overlap and can be created in any order.
class Philox4x32 {
 public:
  using result_type = std::uint64_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t key, std::uint64_t stream_id);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Ten-round bijection of one counter block under a key.
  static Block encrypt(Block counter, Key key);

 private:
  void refill();

  Key key_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  Block buffer_{};
  int used_ = 4;
};

/// Random stream owned by a single trajectory.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t run_index)
      : engine_(master_seed, run_index) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  Philox4x32& engine() { return engine_; }

 private:
  Philox4x32 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// One draw of the Pauli coefficients of the noise generator.
struct NoiseSample {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double alpha3 = 0.0;
};

struct NoiseConfig {
  double alpha = 0.0;  // standard deviation of each coefficient
  std::uint64_t master_seed = 0;
};

RandomStream derive_run_stream(std::uint64_t master_seed, std::uint64_t run_index);

/// Three independent N(0, alpha^2) draws; alpha == 0 yields exact zeros.
NoiseSample draw_sample(RandomStream& stream, const NoiseConfig& config);

CoinMatrix su2_exponential(const NoiseSample& sample);

/// Hadamard * exp(i a(t)) for a fresh sample.
CoinMatrix noisy_coin(RandomStream& stream, const NoiseConfig& config);

}  // namespace qwalk
