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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "walker.hpp"

namespace qwalk {

enum class Mode { noiseless, noisy, classical, decoherent };

struct FitWindows {
  std::optional<TimeWindow> slope;       // q and v from the noiseless walk
  std::optional<TimeWindow> sqrt_tail;   // K and C
  std::optional<TimeWindow> saturation;  // n_alpha
  bool operator==(const FitWindows&) const = default;
};

/// Everything needed to reproduce one experiment. The text form is one
/// `key = value` per line; see kConfigKeys for the accepted keys.
struct ExperimentConfig {
  Mode mode = Mode::noisy;
  InitialCondition init = RightOrigin{};
  int t_max = 2000;
  std::vector<int> snapshots;  // empty selects default_snapshots()
  std::vector<double> alphas{0.05, 0.07, 0.1, 0.14, 0.2, 0.28, 0.4};
  std::vector<double> p_values{0.1};
  int runs = 0;  // > 0 forces this count for every alpha
  int runs_weak = 200;
  int runs_strong = 1000;
  double strong_noise_threshold = 0.07;
  std::uint64_t seed = 20050101;
  FitWindows windows;
  std::string out_dir = "qwalk_out";
  int workers = 1;
  std::string preset = "desk";
  std::vector<double> fig4_alphas{0.025, 0.05, 0.1, 0.2};
  std::vector<double> fig7_alphas{0.025, 0.03, 0.04, 0.07, 0.1};
  double fig2_alpha = 0.025;
  double fig3_alpha = 0.8;
  double k_limit_alpha = 0.8;

  bool operator==(const ExperimentConfig&) const = default;

  /// Runs for one noise level under the weak/strong rule unless `runs` is set.
  int runs_for(double alpha) const;
  /// Configured snapshot times, or the default schedule.
  std::vector<int> snapshot_times() const;
};

extern const std::vector<std::string> kConfigKeys;

/// 1-2-5 times up to t_max, plus 250, 1000, 10000 and t_max itself.
std::vector<int> default_snapshots(int t_max);

/// Overwrites scale parameters with the named preset ("desk" or "paper").
void apply_preset(ExperimentConfig& config, const std::string& name);

/// Sets one key from its text value. Unknown keys and malformed values
/// throw ErrorCode::config.
void set_config_value(ExperimentConfig& config, const std::string& key, const std::string& value);
std::string get_config_value(const ExperimentConfig& config, const std::string& key);

void load_config(ExperimentConfig& config, std::istream& in);
void load_config_file(ExperimentConfig& config, const std::string& path);
std::string serialize_config(const ExperimentConfig& config);
void save_config_file(const ExperimentConfig& config, const std::string& path);

/// Throws ErrorCode::config describing the first violated constraint.
void validate(const ExperimentConfig& config);

std::string mode_name(Mode mode);
std::string init_name(const InitialCondition& init);
InitialCondition parse_init(const std::string& text);
TimeWindow parse_window(const std::string& text);

}  // namespace qwalk
