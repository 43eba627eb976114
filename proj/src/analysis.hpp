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
#include <utility>
#include <vector>

#include "walker.hpp"

namespace qwalk {

/// Noise-averaged first and second moments of the position, indexed by time.
struct MomentSeries {
  std::vector<int> times;
  std::vector<double> mean;
  std::vector<double> second;
  std::vector<double> sigma;

  std::size_t size() const { return times.size(); }
  void push_back(int t, double m1, double m2);
};

/// Closed time interval [begin, end].
struct TimeWindow {
  int begin = 0;
  int end = 0;
  bool operator==(const TimeWindow&) const = default;
};

struct FirstSecondMoments {
  double mean = 0.0;
  double second = 0.0;
};

/// Sum n P(n) and sum n^2 P(n) with compensated summation.
FirstSecondMoments moments(const DistributionSnapshot& dist);

/// Same sums taken directly from the amplitudes over the light cone.
FirstSecondMoments moments(const WalkerState& state);

/// sqrt(second - mean^2), clamped at zero against roundoff.
double sigma_from_moments(double mean, double second);

/// Running sum of snapshots that share t and t_max. Merging partial
/// accumulators is associative up to floating-point reassociation.
class EnsembleAccumulator {
 public:
  void add(const DistributionSnapshot& snap);
  void merge(const EnsembleAccumulator& other);
  int count() const { return count_; }
  DistributionSnapshot result() const;

 private:
  int t_ = -1;
  int t_max_ = -1;
  int count_ = 0;
  std::vector<double> sum_;
};

DistributionSnapshot accumulate_ensemble(std::span<const DistributionSnapshot> runs);

enum class SeriesKind { mean, sigma };

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  std::size_t points = 0;
};

/// Ordinary least squares y = intercept + slope x.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

struct LinearSlope {
  double slope = 0.0;
  double std_error = 0.0;
  double intercept = 0.0;
  TimeWindow window;
};

struct SqrtTail {
  double K = 0.0;
  double C = 0.0;
  double K_stderr = 0.0;
  TimeWindow window;
};

struct Saturation {
  double n_alpha = 0.0;
  /// Fitted change of the mean across the window relative to n_alpha.
  double relative_drift = 0.0;
  bool saturated = false;
  TimeWindow window;
};

struct PowerLaw {
  double c = 0.0;
  double exponent = 0.0;
  double exponent_stderr = 0.0;
};

inline constexpr std::size_t kMinWindowPoints = 10;
inline constexpr double kSaturationTolerance = 0.02;

/// Default windows: last half of the series, or last quarter for saturation.
TimeWindow last_half(const MomentSeries& series);
TimeWindow last_quarter(const MomentSeries& series);

/// Affine fit of mean or sigma against t.
LinearSlope fit_linear_slope(const MomentSeries& series, SeriesKind which, TimeWindow window);

/// Affine fit of sigma against sqrt(t): sigma = K sqrt(t) + C.
SqrtTail fit_sqrt_tail(const MomentSeries& series, TimeWindow window);

/// Average of the mean over the window; saturated when the fitted drift
/// across the window stays below kSaturationTolerance of that average.
Saturation fit_saturation(const MomentSeries& series, TimeWindow window);

/// Throws ErrorCode::not_saturated when the window fails the flatness gate.
Saturation require_saturation(const MomentSeries& series, TimeWindow window);

/// Intersection of sigma = q t with sigma = K sqrt(t): (K / q)^2.
double crossover_T2(double K, double q);

/// Intersection of mean = v t with the plateau n_alpha: n_alpha / v.
double crossover_T1(double n_alpha, double v);

/// Least squares on (ln alpha, ln T); T = c alpha^(-exponent).
PowerLaw fit_power_law(std::span<const std::pair<double, double>> points);

}  // namespace qwalk
