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

#include <optional>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "config.hpp"

namespace qwalk {

/// One line of a fit file.
struct FitRecord {
  std::string name;
  std::optional<double> alpha;  // noise level, or p for the decohered walk
  double value = 0.0;
  std::optional<double> std_error;
  std::optional<TimeWindow> window;
  std::optional<bool> saturated;
};

/// Per-noise-level results of the crossover analysis.
struct AlphaSummary {
  double alpha = 0.0;
  int runs = 0;
  SqrtTail tail;
  double T2 = 0.0;
  Saturation saturation;
  double T1 = 0.0;
};

struct ExperimentReport {
  std::vector<std::string> files;  // relative to the output directory, in write order
  std::vector<FitRecord> fits;
  std::optional<LinearSlope> q;
  std::optional<LinearSlope> v;
  std::vector<AlphaSummary> alphas;
  std::optional<PowerLaw> t2_law;
  std::optional<PowerLaw> t1_law;
};

/// Dispatches on config.mode and writes its datasets into config.out_dir.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Single trajectory (run index 0) with noise level alphas[0] or zero.
ExperimentReport run_walk(const ExperimentConfig& config);

/// Datasets behind every figure: distributions, sigma and mean curves, K,
/// the crossover times and their power-law fits.
ExperimentReport reproduce_figures(const ExperimentConfig& config);

/// Re-analyzes stored moment files; the output goes to config.out_dir.
ExperimentReport fit_moment_files(const ExperimentConfig& config,
                                  const std::vector<std::string>& paths);

/// Moment file contents: header metadata plus the series.
struct MomentFile {
  std::string kind;  // noiseless, noisy, classical, decoherent
  std::optional<double> alpha;
  std::optional<double> p;
  MomentSeries series;
};

MomentFile read_moment_file(const std::string& path);

}  // namespace qwalk
