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

#include "noise.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace qwalk {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

}  // namespace

Philox4x32::Philox4x32(std::uint64_t key, std::uint64_t stream_id)
    : key_{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)},
      stream_id_(stream_id) {}

Philox4x32::Block Philox4x32::encrypt(Block ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

void Philox4x32::refill() {
  const Block counter{static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                      static_cast<std::uint32_t>(stream_id_),
                      static_cast<std::uint32_t>(stream_id_ >> 32)};
  buffer_ = encrypt(counter, key_);
  ++block_;
  used_ = 0;
}

Philox4x32::result_type Philox4x32::operator()() {
  if (used_ >= 4) refill();
  const std::uint64_t lo = buffer_[static_cast<std::size_t>(used_)];
  const std::uint64_t hi = buffer_[static_cast<std::size_t>(used_ + 1)];
  used_ += 2;
  return (hi << 32) | lo;
}

RandomStream derive_run_stream(std::uint64_t master_seed, std::uint64_t run_index) {
  return RandomStream(master_seed, run_index);
}

NoiseSample draw_sample(RandomStream& stream, const NoiseConfig& config) {
  if (!(config.alpha >= 0.0) || !std::isfinite(config.alpha)) {
    throw Error(ErrorCode::invalid_argument,
                "noise alpha must be finite and non-negative, got " + std::to_string(config.alpha));
  }
  if (config.alpha == 0.0) return {};
  NoiseSample s;
  s.alpha1 = config.alpha * stream.normal();
  s.alpha2 = config.alpha * stream.normal();
  s.alpha3 = config.alpha * stream.normal();
  return s;
}

CoinMatrix su2_exponential(const NoiseSample& sample) {
  return su2_exponential(sample.alpha1, sample.alpha2, sample.alpha3);
}

CoinMatrix noisy_coin(RandomStream& stream, const NoiseConfig& config) {
  return compose_coin(su2_exponential(draw_sample(stream, config)));
}

}  // namespace qwalk
