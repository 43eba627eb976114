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

#include "analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "error.hpp"

namespace qwalk {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

struct WindowData {
  std::vector<double> t;
  std::vector<double> y;
};

WindowData select(const MomentSeries& series, const std::vector<double>& values, TimeWindow window) {
  if (window.begin > window.end) {
    throw Error(ErrorCode::fit_failed, "fit window is empty");
  }
  WindowData out;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const int t = series.times[i];
    if (t >= window.begin && t <= window.end) {
      out.t.push_back(static_cast<double>(t));
      out.y.push_back(values[i]);
    }
  }
  if (out.t.size() < kMinWindowPoints) {
    throw Error(ErrorCode::fit_failed, "fit window [" + std::to_string(window.begin) + ", " +
                                           std::to_string(window.end) + "] holds " +
                                           std::to_string(out.t.size()) + " points, need " +
                                           std::to_string(kMinWindowPoints));
  }
  return out;
}

}  // namespace

void MomentSeries::push_back(int t, double m1, double m2) {
  times.push_back(t);
  mean.push_back(m1);
  second.push_back(m2);
  sigma.push_back(sigma_from_moments(m1, m2));
}

double sigma_from_moments(double mean, double second) {
  return std::sqrt(std::max(0.0, second - mean * mean));
}

FirstSecondMoments moments(const DistributionSnapshot& dist) {
  CompensatedSum m1, m2;
  for (int n = -dist.t_max; n <= dist.t_max; ++n) {
    const double p = dist.probs[static_cast<std::size_t>(n + dist.t_max)];
    if (p == 0.0) continue;
    const double x = static_cast<double>(n);
    m1.add(x * p);
    m2.add(x * x * p);
  }
  return {m1.value(), m2.value()};
}

FirstSecondMoments moments(const WalkerState& state) {
  // Plain sums over short blocks, blocks combined with compensation. Blocks
  // keep the inner loop cheap; the compensated outer sum bounds the error
  // growth over the full lattice.
  constexpr int kBlock = 32;
  const auto r = state.right();
  const auto l = state.left();
  const int t_max = state.capacity();
  const int t = std::min(state.time(), t_max);
  const int stride = state.parity_aligned() ? 2 : 1;
  CompensatedSum m1, m2;
  int n = -t;
  while (n <= t) {
    double b1 = 0.0, b2 = 0.0;
    for (int k = 0; k < kBlock && n <= t; ++k, n += stride) {
      const std::size_t i = static_cast<std::size_t>(n + t_max);
      const double p = r[i].real() * r[i].real() + r[i].imag() * r[i].imag() +
                       l[i].real() * l[i].real() + l[i].imag() * l[i].imag();
      const double x = static_cast<double>(n);
      b1 += x * p;
      b2 += x * x * p;
    }
    m1.add(b1);
    m2.add(b2);
  }
  return {m1.value(), m2.value()};
}

void EnsembleAccumulator::add(const DistributionSnapshot& snap) {
  if (count_ == 0) {
    t_ = snap.t;
    t_max_ = snap.t_max;
    sum_.assign(snap.probs.size(), 0.0);
  } else if (snap.t != t_ || snap.t_max != t_max_) {
    throw Error(ErrorCode::mismatch, "snapshot at t = " + std::to_string(snap.t) +
                                         " cannot join an ensemble at t = " + std::to_string(t_));
  }
  // Weighted so that adding an already averaged snapshot counts all its runs.
  const double w = static_cast<double>(snap.runs_averaged);
  for (std::size_t i = 0; i < sum_.size(); ++i) sum_[i] += w * snap.probs[i];
  count_ += snap.runs_averaged;
}

void EnsembleAccumulator::merge(const EnsembleAccumulator& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  if (other.t_ != t_ || other.t_max_ != t_max_) {
    throw Error(ErrorCode::mismatch, "cannot merge ensembles taken at different times");
  }
  for (std::size_t i = 0; i < sum_.size(); ++i) sum_[i] += other.sum_[i];
  count_ += other.count_;
}

DistributionSnapshot EnsembleAccumulator::result() const {
  if (count_ == 0) throw Error(ErrorCode::invalid_argument, "empty ensemble");
  DistributionSnapshot out;
  out.t = t_;
  out.t_max = t_max_;
  out.runs_averaged = count_;
  out.probs.resize(sum_.size());
  const double inv = 1.0 / static_cast<double>(count_);
  for (std::size_t i = 0; i < sum_.size(); ++i) out.probs[i] = sum_[i] * inv;
  return out;
}

DistributionSnapshot accumulate_ensemble(std::span<const DistributionSnapshot> runs) {
  EnsembleAccumulator acc;
  for (const auto& snap : runs) acc.add(snap);
  return acc.result();
}

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 3) throw Error(ErrorCode::fit_failed, "least squares needs >= 3 points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw Error(ErrorCode::fit_failed, "degenerate abscissa in least squares");
  LinearFit fit;
  fit.points = n;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ssr += r * r;
  }
  fit.slope_stderr = std::sqrt(ssr / static_cast<double>(n - 2) / sxx);
  return fit;
}

TimeWindow last_half(const MomentSeries& series) {
  if (series.size() == 0) throw Error(ErrorCode::fit_failed, "empty moment series");
  const int last = series.times.back();
  return {last / 2, last};
}

TimeWindow last_quarter(const MomentSeries& series) {
  if (series.size() == 0) throw Error(ErrorCode::fit_failed, "empty moment series");
  const int last = series.times.back();
  return {last - last / 4, last};
}

LinearSlope fit_linear_slope(const MomentSeries& series, SeriesKind which, TimeWindow window) {
  const auto data = select(series, which == SeriesKind::mean ? series.mean : series.sigma, window);
  const auto fit = least_squares(data.t, data.y);
  return {fit.slope, fit.slope_stderr, fit.intercept, window};
}

SqrtTail fit_sqrt_tail(const MomentSeries& series, TimeWindow window) {
  auto data = select(series, series.sigma, window);
  for (auto& t : data.t) t = std::sqrt(t);
  const auto fit = least_squares(data.t, data.y);
  return {fit.slope, fit.intercept, fit.slope_stderr, window};
}

Saturation fit_saturation(const MomentSeries& series, TimeWindow window) {
  const auto data = select(series, series.mean, window);
  Saturation out;
  out.window = window;
  double sum = 0.0;
  for (double y : data.y) sum += y;
  out.n_alpha = sum / static_cast<double>(data.y.size());
  const auto fit = least_squares(data.t, data.y);
  const double drift = std::abs(fit.slope * (data.t.back() - data.t.front()));
  if (out.n_alpha != 0.0) {
    out.relative_drift = drift / std::abs(out.n_alpha);
  } else {
    out.relative_drift = drift == 0.0 ? 0.0 : INFINITY;
  }
  out.saturated = out.relative_drift < kSaturationTolerance;
  return out;
}

Saturation require_saturation(const MomentSeries& series, TimeWindow window) {
  auto s = fit_saturation(series, window);
  if (!s.saturated) {
    throw Error(ErrorCode::not_saturated,
                "mean drifts by " + std::to_string(100.0 * s.relative_drift) +
                    "% across the window, above the 2% saturation gate");
  }
  return s;
}

double crossover_T2(double K, double q) {
  if (!(K > 0.0) || !(q > 0.0)) throw Error(ErrorCode::domain, "crossover_T2 needs K > 0, q > 0");
  const double ratio = K / q;
  return ratio * ratio;
}

double crossover_T1(double n_alpha, double v) {
  if (!(v > 0.0)) throw Error(ErrorCode::domain, "crossover_T1 needs v > 0");
  if (!(n_alpha >= 0.0)) throw Error(ErrorCode::domain, "crossover_T1 needs n_alpha >= 0");
  return n_alpha / v;
}

PowerLaw fit_power_law(std::span<const std::pair<double, double>> points) {
  if (points.size() < 4) throw Error(ErrorCode::fit_failed, "power-law fit needs >= 4 points");
  std::vector<double> lx, ly;
  for (const auto& [a, t] : points) {
    if (!(a > 0.0) || !(t > 0.0) || !std::isfinite(a) || !std::isfinite(t)) {
      throw Error(ErrorCode::domain, "power-law fit needs positive finite data");
    }
    lx.push_back(std::log(a));
    ly.push_back(std::log(t));
  }
  const auto fit = least_squares(lx, ly);
  return {std::exp(fit.intercept), -fit.slope, fit.slope_stderr};
}

}  // namespace qwalk
