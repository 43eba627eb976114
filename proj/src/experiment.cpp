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

#include "experiment.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string_view>

#include <fmt/format.h>
#include <json.hpp>

#include "baselines.hpp"
#include "ensemble.hpp"
#include "error.hpp"

namespace qwalk {

namespace fs = std::filesystem;

namespace {

std::string num(double x) { return fmt::format("{}", x); }

/// Owns the output directory and records every file written through it.
class OutputDir {
 public:
  OutputDir(const std::string& root, ExperimentReport& report) : root_(root), report_(report) {
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec) throw Error(ErrorCode::io, "cannot create output directory " + root + ": " + ec.message());
  }

  void write(const std::string& name, const std::string& content) {
    const fs::path path = root_ / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) throw Error(ErrorCode::io, "failed writing " + path.string());
    report_.files.push_back(name);
  }

 private:
  fs::path root_;
  ExperimentReport& report_;
};

std::string distribution_csv(const DistributionSnapshot& snap, const std::string& meta) {
  std::string out = fmt::format("# qwalk distribution {} t={}\nn,probability\n", meta, snap.t);
  // Sites with n + t odd are empty for walks that start at the origin.
  for (int n = -snap.t; n <= snap.t; n += 2) out += fmt::format("{},{}\n", n, num(snap.at(n)));
  return out;
}

std::string moments_csv(const MomentSeries& series, const std::string& meta) {
  std::string out = fmt::format("# qwalk moments {}\nt,mean,second,sigma\n", meta);
  for (std::size_t i = 0; i < series.size(); ++i) {
    out += fmt::format("{},{},{},{}\n", series.times[i], num(series.mean[i]),
                       num(series.second[i]), num(series.sigma[i]));
  }
  return out;
}

nlohmann::ordered_json to_json(const FitRecord& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  if (r.alpha) j["alpha"] = *r.alpha;
  j["value"] = r.value;
  j["stderr"] = r.std_error ? nlohmann::ordered_json(*r.std_error) : nlohmann::ordered_json();
  j["window"] = r.window ? nlohmann::ordered_json::array({r.window->begin, r.window->end})
                         : nlohmann::ordered_json();
  if (r.saturated) j["saturated"] = *r.saturated;
  return j;
}

std::string fits_json(const std::vector<FitRecord>& fits) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : fits) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string power_law_json(const std::string& prefactor, const std::string& exponent,
                           const PowerLaw& law, const std::vector<std::pair<double, double>>& pts) {
  nlohmann::ordered_json j;
  j[prefactor] = law.c;
  j[exponent] = law.exponent;
  j[exponent + "_stderr"] = law.exponent_stderr;
  auto points = nlohmann::ordered_json::array();
  for (const auto& [a, t] : pts) points.push_back({a, t});
  j["points"] = points;
  return j.dump(2) + "\n";
}

EnsembleResult noisy_ensemble(const ExperimentConfig& c, const InitialCondition& init, double alpha,
                              int runs, int t_end, std::vector<int> snaps) {
  EnsembleSpec spec;
  spec.channel = Channel::unitary_noise;
  spec.strength = alpha;
  spec.init = init;
  spec.t_end = t_end;
  spec.runs = runs;
  spec.snapshot_times = std::move(snaps);
  spec.seed = c.seed;
  spec.workers = c.workers;
  return run_ensemble(spec);
}

std::string meta(const std::string& kind, const std::string& param, std::optional<double> value,
                 const InitialCondition& init, int runs, std::uint64_t seed) {
  std::string s = "kind=" + kind;
  if (value) s += " " + param + "=" + num(*value);
  return s + fmt::format(" init={} runs={} seed={}", init_name(init), runs, seed);
}

TimeWindow clip(TimeWindow w, const MomentSeries& series) {
  w.end = std::min(w.end, series.times.back());
  return w;
}

struct Asymptotes {
  LinearSlope q;
  LinearSlope v;
};

Asymptotes noiseless_asymptotes(const ExperimentConfig& c, const MomentSeries& series) {
  const TimeWindow w = clip(c.windows.slope.value_or(last_half(series)), series);
  return {fit_linear_slope(series, SeriesKind::sigma, w),
          fit_linear_slope(series, SeriesKind::mean, w)};
}

void record_asymptotes(ExperimentReport& report, const Asymptotes& a) {
  report.q = a.q;
  report.v = a.v;
  report.fits.push_back({"q", std::nullopt, a.q.slope, a.q.std_error, a.q.window, std::nullopt});
  report.fits.push_back({"v", std::nullopt, a.v.slope, a.v.std_error, a.v.window, std::nullopt});
}

/// K, C, T2, n_alpha and T1 for one noisy series.
AlphaSummary analyze_alpha(const ExperimentConfig& c, double alpha, int runs,
                           const MomentSeries& series, const Asymptotes& ref,
                           std::vector<FitRecord>& fits) {
  AlphaSummary s;
  s.alpha = alpha;
  s.runs = runs;
  s.tail = fit_sqrt_tail(series, clip(c.windows.sqrt_tail.value_or(last_half(series)), series));
  s.saturation =
      fit_saturation(series, clip(c.windows.saturation.value_or(last_quarter(series)), series));
  s.T2 = s.tail.K > 0.0 ? crossover_T2(s.tail.K, ref.q.slope) : NAN;
  s.T1 = s.saturation.n_alpha >= 0.0 ? crossover_T1(s.saturation.n_alpha, ref.v.slope) : NAN;

  fits.push_back({"K", alpha, s.tail.K, s.tail.K_stderr, s.tail.window, std::nullopt});
  fits.push_back({"C", alpha, s.tail.C, std::nullopt, s.tail.window, std::nullopt});
  if (std::isfinite(s.T2)) fits.push_back({"T2", alpha, s.T2, std::nullopt, s.tail.window, std::nullopt});
  fits.push_back({"n_alpha", alpha, s.saturation.n_alpha, std::nullopt, s.saturation.window,
                  s.saturation.saturated});
  if (std::isfinite(s.T1)) {
    fits.push_back({"T1", alpha, s.T1, std::nullopt, s.saturation.window, s.saturation.saturated});
  }
  return s;
}

/// T2 law over every alpha > 0; T1 law over saturated points with n_alpha > 0.
void fit_laws(ExperimentReport& report, std::vector<std::pair<double, double>>& t2_points,
              std::vector<std::pair<double, double>>& t1_points) {
  for (const auto& s : report.alphas) {
    if (s.alpha <= 0.0) continue;
    if (std::isfinite(s.T2) && s.T2 > 0.0) t2_points.emplace_back(s.alpha, s.T2);
    if (s.saturation.saturated && std::isfinite(s.T1) && s.T1 > 0.0) {
      t1_points.emplace_back(s.alpha, s.T1);
    }
  }
  if (t2_points.size() >= 4) {
    report.t2_law = fit_power_law(t2_points);
    report.fits.push_back({"c2", std::nullopt, report.t2_law->c, std::nullopt, std::nullopt, std::nullopt});
    report.fits.push_back({"eta", std::nullopt, report.t2_law->exponent,
                           report.t2_law->exponent_stderr, std::nullopt, std::nullopt});
  }
  if (t1_points.size() >= 4) {
    report.t1_law = fit_power_law(t1_points);
    report.fits.push_back({"c1", std::nullopt, report.t1_law->c, std::nullopt, std::nullopt, std::nullopt});
    report.fits.push_back({"rho", std::nullopt, report.t1_law->exponent,
                           report.t1_law->exponent_stderr, std::nullopt, std::nullopt});
  }
}

std::vector<double> positive_sorted(std::vector<double> values) {
  std::erase_if(values, [](double a) { return !(a > 0.0); });
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

ExperimentReport run_noiseless(const ExperimentConfig& c) {
  ExperimentReport report;
  OutputDir out(c.out_dir, report);
  const auto snaps = c.snapshot_times();
  const auto ens = noisy_ensemble(c, c.init, 0.0, 1, c.t_max, snaps);
  const std::string m = meta("noiseless", "", std::nullopt, c.init, 1, c.seed);
  out.write("noiseless_moments.csv", moments_csv(ens.moments, m));
  for (const auto& snap : ens.snapshots) {
    out.write(fmt::format("noiseless_dist_t{}.csv", snap.t), distribution_csv(snap, m));
  }
  record_asymptotes(report, noiseless_asymptotes(c, ens.moments));
  out.write("fits.json", fits_json(report.fits));
  return report;
}

ExperimentReport run_noisy(const ExperimentConfig& c) {
  ExperimentReport report;
  OutputDir out(c.out_dir, report);
  const auto snaps = c.snapshot_times();

  const auto reference = noisy_ensemble(c, c.init, 0.0, 1, c.t_max, {});
  out.write("noiseless_moments.csv",
            moments_csv(reference.moments, meta("noiseless", "", std::nullopt, c.init, 1, c.seed)));
  const auto ref = noiseless_asymptotes(c, reference.moments);
  record_asymptotes(report, ref);

  for (double alpha : c.alphas) {
    const int runs = c.runs_for(alpha);
    const auto ens = noisy_ensemble(c, c.init, alpha, runs, c.t_max, snaps);
    const std::string m = meta("noisy", "alpha", alpha, c.init, runs, c.seed);
    out.write(fmt::format("moments_alpha{}.csv", num(alpha)), moments_csv(ens.moments, m));
    for (const auto& snap : ens.snapshots) {
      out.write(fmt::format("dist_alpha{}_t{}.csv", num(alpha), snap.t), distribution_csv(snap, m));
    }
    if (alpha > 0.0) report.alphas.push_back(analyze_alpha(c, alpha, runs, ens.moments, ref, report.fits));
  }
  std::vector<std::pair<double, double>> t2, t1;
  fit_laws(report, t2, t1);
  out.write("fits.json", fits_json(report.fits));
  return report;
}

ExperimentReport run_classical(const ExperimentConfig& c) {
  ExperimentReport report;
  OutputDir out(c.out_dir, report);
  MomentSeries series;
  for (int t = 0; t <= c.t_max; ++t) {
    const auto mom = moments(classical_distribution(t));
    series.push_back(t, mom.mean, mom.second);
  }
  const std::string m = "kind=classical";
  out.write("classical_moments.csv", moments_csv(series, m));
  for (int t : c.snapshot_times()) {
    out.write(fmt::format("classical_dist_t{}.csv", t), distribution_csv(classical_distribution(t), m));
  }
  const auto tail = fit_sqrt_tail(series, clip(c.windows.sqrt_tail.value_or(last_half(series)), series));
  report.fits.push_back({"K", std::nullopt, tail.K, tail.K_stderr, tail.window, std::nullopt});
  report.fits.push_back({"C", std::nullopt, tail.C, std::nullopt, tail.window, std::nullopt});
  out.write("fits.json", fits_json(report.fits));
  return report;
}

ExperimentReport run_decoherent(const ExperimentConfig& c) {
  ExperimentReport report;
  OutputDir out(c.out_dir, report);
  const auto snaps = c.snapshot_times();
  for (double p : c.p_values) {
    EnsembleSpec spec;
    spec.channel = Channel::measurement;
    spec.strength = p;
    spec.init = c.init;
    spec.t_end = c.t_max;
    spec.runs = c.runs > 0 ? c.runs : c.runs_strong;
    spec.snapshot_times = snaps;
    spec.seed = c.seed;
    spec.workers = c.workers;
    const auto ens = run_ensemble(spec);
    const std::string m = meta("decoherent", "p", p, c.init, spec.runs, c.seed);
    out.write(fmt::format("moments_p{}.csv", num(p)), moments_csv(ens.moments, m));
    for (const auto& snap : ens.snapshots) {
      out.write(fmt::format("dist_p{}_t{}.csv", num(p), snap.t), distribution_csv(snap, m));
    }
    const auto sat = fit_saturation(
        ens.moments, clip(c.windows.saturation.value_or(last_quarter(ens.moments)), ens.moments));
    const auto tail = fit_sqrt_tail(
        ens.moments, clip(c.windows.sqrt_tail.value_or(last_half(ens.moments)), ens.moments));
    report.fits.push_back({"n_p", p, sat.n_alpha, std::nullopt, sat.window, sat.saturated});
    report.fits.push_back({"K_p", p, tail.K, tail.K_stderr, tail.window, std::nullopt});
    if (p > 0.0) {
      report.fits.push_back({"n_p_analytic", p, analytic_np(p), std::nullopt, std::nullopt, std::nullopt});
      report.fits.push_back({"K_p_analytic", p, analytic_Kp(p), std::nullopt, std::nullopt, std::nullopt});
    }
  }
  out.write("fits.json", fits_json(report.fits));
  return report;
}

std::vector<int> figure_times(int t_max) {
  std::vector<int> times;
  for (int t : {250, 1000, 10000}) times.push_back(std::min(t, t_max));
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

std::string curves_csv(const std::string& first, const MomentSeries& noiseless,
                       const std::vector<double>& alphas,
                       const std::map<double, EnsembleResult>& runs, bool sigma, bool classical) {
  std::string out = "t," + first;
  for (double a : alphas) out += ",alpha_" + num(a);
  if (classical) out += ",classical";
  out += "\n";
  for (std::size_t i = 0; i < noiseless.size(); ++i) {
    out += fmt::format("{},{}", noiseless.times[i], num(sigma ? noiseless.sigma[i] : noiseless.mean[i]));
    for (double a : alphas) {
      const auto& s = runs.at(a).moments;
      out += "," + num(sigma ? s.sigma[i] : s.mean[i]);
    }
    if (classical) out += "," + num(std::sqrt(static_cast<double>(noiseless.times[i])));
    out += "\n";
  }
  return out;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
  validate(config);
  switch (config.mode) {
    case Mode::noiseless: return run_noiseless(config);
    case Mode::noisy: return run_noisy(config);
    case Mode::classical: return run_classical(config);
    case Mode::decoherent: return run_decoherent(config);
  }
  throw Error(ErrorCode::config, "unknown mode");
}

ExperimentReport run_walk(const ExperimentConfig& config) {
  validate(config);
  ExperimentReport report;
  OutputDir out(config.out_dir, report);
  const double alpha = config.alphas.empty() ? 0.0 : config.alphas.front();
  const auto ens = noisy_ensemble(config, config.init, alpha, 1, config.t_max, config.snapshot_times());
  const std::string m = meta("walk", "alpha", alpha, config.init, 1, config.seed);
  out.write("walk_moments.csv", moments_csv(ens.moments, m));
  for (const auto& snap : ens.snapshots) {
    out.write(fmt::format("walk_dist_t{}.csv", snap.t), distribution_csv(snap, m));
  }
  return report;
}

ExperimentReport reproduce_figures(const ExperimentConfig& c) {
  validate(c);
  if (c.alphas.empty()) throw Error(ErrorCode::config, "figures need a non-empty alpha sweep");
  ExperimentReport report;
  OutputDir out(c.out_dir, report);
  const auto fig_times = figure_times(c.t_max);

  // Figures 1-3: distributions from the symmetric start.
  const InitialCondition symmetric = SymmetricOrigin{};
  const auto fig1 = noisy_ensemble(c, symmetric, 0.0, 1, c.t_max, fig_times);
  for (const auto& snap : fig1.snapshots) {
    out.write(fmt::format("fig1_dist_t{}.csv", snap.t),
              distribution_csv(snap, meta("noiseless", "", std::nullopt, symmetric, 1, c.seed)));
  }
  const int runs2 = c.runs_for(c.fig2_alpha);
  const auto fig2 = noisy_ensemble(c, symmetric, c.fig2_alpha, runs2, c.t_max, fig_times);
  for (const auto& snap : fig2.snapshots) {
    out.write(fmt::format("fig2_dist_t{}.csv", snap.t),
              distribution_csv(snap, meta("noisy", "alpha", c.fig2_alpha, symmetric, runs2, c.seed)));
  }
  const int t3 = std::min(1000, c.t_max);
  const int runs3 = c.runs_for(c.fig3_alpha);
  const auto fig3 = noisy_ensemble(c, symmetric, c.fig3_alpha, runs3, t3, {t3});
  out.write(fmt::format("fig3_dist_t{}.csv", t3),
            distribution_csv(fig3.snapshots.front(),
                             meta("noisy", "alpha", c.fig3_alpha, symmetric, runs3, c.seed)));

  // Figures 4-8: moments from |0>|R>.
  const InitialCondition right = RightOrigin{};
  const auto noiseless = noisy_ensemble(c, right, 0.0, 1, c.t_max, {});
  out.write("noiseless_moments.csv",
            moments_csv(noiseless.moments, meta("noiseless", "", std::nullopt, right, 1, c.seed)));
  const auto ref = noiseless_asymptotes(c, noiseless.moments);
  record_asymptotes(report, ref);

  const auto sweep = positive_sorted(c.alphas);
  auto k_alphas = sweep;
  if (c.k_limit_alpha > 0.0) k_alphas.push_back(c.k_limit_alpha);
  k_alphas = positive_sorted(k_alphas);
  auto all = k_alphas;
  all.insert(all.end(), c.fig4_alphas.begin(), c.fig4_alphas.end());
  all.insert(all.end(), c.fig7_alphas.begin(), c.fig7_alphas.end());
  all = positive_sorted(all);

  std::map<double, EnsembleResult> runs;
  for (double a : all) {
    auto ens = noisy_ensemble(c, right, a, c.runs_for(a), c.t_max, {});
    out.write(fmt::format("moments_alpha{}.csv", num(a)),
              moments_csv(ens.moments, meta("noisy", "alpha", a, right, ens.runs, c.seed)));
    runs.emplace(a, std::move(ens));
  }

  out.write("fig4_sigma.csv", curves_csv("noiseless", noiseless.moments, positive_sorted(c.fig4_alphas),
                                         runs, true, true));
  out.write("fig7_mean.csv", curves_csv("noiseless", noiseless.moments, positive_sorted(c.fig7_alphas),
                                        runs, false, false));

  std::map<double, AlphaSummary> summaries;
  for (double a : k_alphas) {
    summaries.emplace(a, analyze_alpha(c, a, runs.at(a).runs, runs.at(a).moments, ref, report.fits));
  }
  for (double a : sweep) report.alphas.push_back(summaries.at(a));

  std::string fig5 = "alpha,K,K_stderr,C\n";
  for (double a : k_alphas) {
    const auto& s = summaries.at(a);
    fig5 += fmt::format("{},{},{},{}\n", num(a), num(s.tail.K), num(s.tail.K_stderr), num(s.tail.C));
  }
  out.write("fig5_K.csv", fig5);

  std::vector<std::pair<double, double>> t2_points, t1_points;
  fit_laws(report, t2_points, t1_points);

  std::string fig6 = "alpha,K,T2\n";
  for (const auto& s : report.alphas) fig6 += fmt::format("{},{},{}\n", num(s.alpha), num(s.tail.K), num(s.T2));
  out.write("fig6_T2.csv", fig6);
  if (report.t2_law) out.write("fig6_fit.json", power_law_json("c2", "eta", *report.t2_law, t2_points));

  std::string fig8 = "alpha,n_alpha,relative_drift,saturated,T1\n";
  for (const auto& s : report.alphas) {
    fig8 += fmt::format("{},{},{},{},{}\n", num(s.alpha), num(s.saturation.n_alpha),
                        num(s.saturation.relative_drift), s.saturation.saturated ? 1 : 0, num(s.T1));
  }
  out.write("fig8_T1.csv", fig8);
  if (report.t1_law) out.write("fig8_fit.json", power_law_json("c1", "rho", *report.t1_law, t1_points));

  out.write("fits.json", fits_json(report.fits));
  return report;
}

namespace {

template <typename T>
bool parse_field(std::string_view text, T& value) {
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc{} && ptr == text.data() + text.size() && !text.empty();
}

}  // namespace

MomentFile read_moment_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open moment file " + path);
  MomentFile file;
  std::string line;
  bool header_seen = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream tokens(line.substr(1));
      std::string token;
      while (tokens >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) continue;
        const auto key = token.substr(0, eq), value = token.substr(eq + 1);
        if (key == "kind") {
          file.kind = value;
        } else if (key == "alpha" || key == "p") {
          double x = 0.0;
          if (!parse_field(value, x)) {
            throw Error(ErrorCode::io, fmt::format("{}:{}: bad header value '{}'", path, line_no, token));
          }
          (key == "alpha" ? file.alpha : file.p) = x;
        }
      }
      continue;
    }
    if (!header_seen) {
      if (line != "t,mean,second,sigma") {
        throw Error(ErrorCode::io, path + ": expected header 't,mean,second,sigma'");
      }
      header_seen = true;
      continue;
    }
    std::string_view rest = line;
    std::array<std::string_view, 4> cells;
    std::size_t count = 0;
    for (; count < cells.size() && !rest.empty(); ++count) {
      const auto comma = rest.find(',');
      cells[count] = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    int t = 0;
    double m1 = 0.0, m2 = 0.0, sigma = 0.0;
    if (count != 4 || !rest.empty() || !parse_field(cells[0], t) || !parse_field(cells[1], m1) ||
        !parse_field(cells[2], m2) || !parse_field(cells[3], sigma)) {
      throw Error(ErrorCode::io, fmt::format("{}:{}: malformed row", path, line_no));
    }
    file.series.push_back(t, m1, m2);
  }
  if (!header_seen || file.series.size() == 0) throw Error(ErrorCode::io, path + ": no moment rows");
  return file;
}

ExperimentReport fit_moment_files(const ExperimentConfig& c, const std::vector<std::string>& paths) {
  validate(c);
  if (paths.empty()) throw Error(ErrorCode::config, "fit needs at least one moment file");
  std::vector<MomentFile> files;
  for (const auto& p : paths) files.push_back(read_moment_file(p));

  ExperimentReport report;
  OutputDir out(c.out_dir, report);
  std::optional<Asymptotes> ref;
  for (const auto& f : files) {
    if (f.kind == "noiseless") {
      ref = noiseless_asymptotes(c, f.series);
      record_asymptotes(report, *ref);
    }
  }
  for (const auto& f : files) {
    if (f.kind == "noiseless") continue;
    const auto& s = f.series;
    if (ref && f.alpha && *f.alpha > 0.0) {
      report.alphas.push_back(analyze_alpha(c, *f.alpha, 0, s, *ref, report.fits));
      continue;
    }
    const std::optional<double> param = f.alpha ? f.alpha : f.p;
    const auto tail = fit_sqrt_tail(s, clip(c.windows.sqrt_tail.value_or(last_half(s)), s));
    const auto sat = fit_saturation(s, clip(c.windows.saturation.value_or(last_quarter(s)), s));
    report.fits.push_back({"K", param, tail.K, tail.K_stderr, tail.window, std::nullopt});
    report.fits.push_back({"C", param, tail.C, std::nullopt, tail.window, std::nullopt});
    report.fits.push_back({"n_alpha", param, sat.n_alpha, std::nullopt, sat.window, sat.saturated});
  }
  std::vector<std::pair<double, double>> t2, t1;
  fit_laws(report, t2, t1);
  out.write("fits.json", fits_json(report.fits));
  return report;
}

}  // namespace qwalk
