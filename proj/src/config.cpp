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

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "error.hpp"

namespace qwalk {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  return parts;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  throw Error(ErrorCode::config, "invalid value '" + value + "' for key '" + key + "'");
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  const std::string s = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) bad_value(key, text);
  return value;
}

template <typename T>
std::vector<T> parse_list(const std::string& key, const std::string& text) {
  std::vector<T> out;
  if (trim(text).empty()) return out;
  for (const auto& part : split(text, ',')) out.push_back(parse_number<T>(key, part));
  return out;
}

template <typename T>
std::string join(const std::vector<T>& values) {
  return fmt::format("{}", fmt::join(values, ","));
}

std::string window_text(const std::optional<TimeWindow>& w) {
  return w ? fmt::format("{}:{}", w->begin, w->end) : std::string("auto");
}

std::optional<TimeWindow> parse_optional_window(const std::string& text) {
  const auto s = trim(text);
  if (s.empty() || s == "auto") return std::nullopt;
  return parse_window(s);
}

}  // namespace

const std::vector<std::string> kConfigKeys = {
    "preset",      "mode",        "init",        "t_max",       "snapshots",
    "alphas",      "p",           "runs",        "runs_weak",   "runs_strong",
    "strong_noise_threshold",     "seed",        "window_slope", "window_sqrt",
    "window_saturation",          "out",         "workers",     "fig2_alpha",
    "fig3_alpha",  "fig4_alphas", "fig7_alphas", "k_limit_alpha",
};

int ExperimentConfig::runs_for(double alpha) const {
  if (runs > 0) return runs;
  return alpha < strong_noise_threshold ? runs_weak : runs_strong;
}

std::vector<int> ExperimentConfig::snapshot_times() const {
  return snapshots.empty() ? default_snapshots(t_max) : snapshots;
}

std::vector<int> default_snapshots(int t_max) {
  std::vector<int> times;
  for (int decade = 1; decade <= t_max; decade *= 10) {
    for (int m : {1, 2, 5}) {
      if (m * decade <= t_max) times.push_back(m * decade);
    }
    if (decade > t_max / 10) break;
  }
  for (int t : {250, 1000, 10000}) {
    if (t <= t_max) times.push_back(t);
  }
  times.push_back(t_max);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

void apply_preset(ExperimentConfig& config, const std::string& name) {
  if (name == "desk") {
    config.t_max = 2000;
    config.runs = 0;
    config.runs_weak = 200;
    config.runs_strong = 1000;
    config.alphas = {0.05, 0.07, 0.1, 0.14, 0.2, 0.28, 0.4};
  } else if (name == "paper") {
    config.t_max = 10000;
    config.runs = 0;
    config.runs_weak = 200;
    config.runs_strong = 4000;
    config.alphas = {0.025, 0.03, 0.04, 0.05, 0.07, 0.1, 0.14, 0.2};
  } else {
    throw Error(ErrorCode::config, "unknown preset '" + name + "' (expected desk or paper)");
  }
  config.strong_noise_threshold = 0.07;
  config.snapshots.clear();
  config.windows = {};
  config.preset = name;
}

std::string mode_name(Mode mode) {
  switch (mode) {
    case Mode::noiseless: return "noiseless";
    case Mode::noisy: return "noisy";
    case Mode::classical: return "classical";
    case Mode::decoherent: return "decoherent";
  }
  return "noisy";
}

std::string init_name(const InitialCondition& init) {
  if (std::holds_alternative<SymmetricOrigin>(init)) return "symmetric";
  if (std::holds_alternative<RightOrigin>(init)) return "right";
  const auto& c = std::get<CustomOrigin>(init);
  return fmt::format("custom:{},{},{},{}", c.c_r.real(), c.c_r.imag(), c.c_l.real(),
                     c.c_l.imag());
}

InitialCondition parse_init(const std::string& text) {
  const auto s = trim(text);
  if (s == "symmetric") return SymmetricOrigin{};
  if (s == "right") return RightOrigin{};
  if (s.rfind("custom:", 0) == 0) {
    const auto v = parse_list<double>("init", s.substr(7));
    if (v.size() != 4) bad_value("init", text);
    CustomOrigin c{{v[0], v[1]}, {v[2], v[3]}};
    origin_amplitudes(c);  // rejects non-normalized chirality
    return c;
  }
  bad_value("init", text);
}

TimeWindow parse_window(const std::string& text) {
  const auto parts = split(trim(text), ':');
  if (parts.size() != 2) bad_value("fit window", text);
  return {parse_number<int>("fit window", parts[0]), parse_number<int>("fit window", parts[1])};
}

void set_config_value(ExperimentConfig& c, const std::string& raw_key, const std::string& value) {
  std::string key = trim(raw_key);
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "preset") {
    apply_preset(c, trim(value));
  } else if (key == "mode") {
    const auto v = trim(value);
    if (v == "noiseless") c.mode = Mode::noiseless;
    else if (v == "noisy") c.mode = Mode::noisy;
    else if (v == "classical") c.mode = Mode::classical;
    else if (v == "decoherent") c.mode = Mode::decoherent;
    else bad_value(key, value);
  } else if (key == "init") {
    c.init = parse_init(value);
  } else if (key == "t_max" || key == "tmax") {
    c.t_max = parse_number<int>(key, value);
  } else if (key == "snapshots") {
    c.snapshots = trim(value) == "auto" ? std::vector<int>{} : parse_list<int>(key, value);
  } else if (key == "alphas" || key == "alpha") {
    c.alphas = parse_list<double>(key, value);
  } else if (key == "p") {
    c.p_values = parse_list<double>(key, value);
  } else if (key == "runs") {
    c.runs = parse_number<int>(key, value);
  } else if (key == "runs_weak") {
    c.runs_weak = parse_number<int>(key, value);
  } else if (key == "runs_strong") {
    c.runs_strong = parse_number<int>(key, value);
  } else if (key == "strong_noise_threshold") {
    c.strong_noise_threshold = parse_number<double>(key, value);
  } else if (key == "seed") {
    c.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "window_slope") {
    c.windows.slope = parse_optional_window(value);
  } else if (key == "window_sqrt") {
    c.windows.sqrt_tail = parse_optional_window(value);
  } else if (key == "window_saturation") {
    c.windows.saturation = parse_optional_window(value);
  } else if (key == "out") {
    c.out_dir = trim(value);
  } else if (key == "workers") {
    c.workers = parse_number<int>(key, value);
  } else if (key == "fig2_alpha") {
    c.fig2_alpha = parse_number<double>(key, value);
  } else if (key == "fig3_alpha") {
    c.fig3_alpha = parse_number<double>(key, value);
  } else if (key == "fig4_alphas") {
    c.fig4_alphas = parse_list<double>(key, value);
  } else if (key == "fig7_alphas") {
    c.fig7_alphas = parse_list<double>(key, value);
  } else if (key == "k_limit_alpha") {
    c.k_limit_alpha = parse_number<double>(key, value);
  } else {
    throw Error(ErrorCode::config, "unknown configuration key '" + key + "'");
  }
}

std::string get_config_value(const ExperimentConfig& c, const std::string& raw_key) {
  std::string key = trim(raw_key);
  std::replace(key.begin(), key.end(), '-', '_');
  if (key == "preset") return c.preset;
  if (key == "mode") return mode_name(c.mode);
  if (key == "init") return init_name(c.init);
  if (key == "t_max") return std::to_string(c.t_max);
  if (key == "snapshots") return c.snapshots.empty() ? "auto" : join(c.snapshots);
  if (key == "alphas") return join(c.alphas);
  if (key == "p") return join(c.p_values);
  if (key == "runs") return std::to_string(c.runs);
  if (key == "runs_weak") return std::to_string(c.runs_weak);
  if (key == "runs_strong") return std::to_string(c.runs_strong);
  if (key == "strong_noise_threshold") return fmt::format("{}", c.strong_noise_threshold);
  if (key == "seed") return std::to_string(c.seed);
  if (key == "window_slope") return window_text(c.windows.slope);
  if (key == "window_sqrt") return window_text(c.windows.sqrt_tail);
  if (key == "window_saturation") return window_text(c.windows.saturation);
  if (key == "out") return c.out_dir;
  if (key == "workers") return std::to_string(c.workers);
  if (key == "fig2_alpha") return fmt::format("{}", c.fig2_alpha);
  if (key == "fig3_alpha") return fmt::format("{}", c.fig3_alpha);
  if (key == "fig4_alphas") return join(c.fig4_alphas);
  if (key == "fig7_alphas") return join(c.fig7_alphas);
  if (key == "k_limit_alpha") return fmt::format("{}", c.k_limit_alpha);
  throw Error(ErrorCode::config, "unknown configuration key '" + key + "'");
}

void load_config(ExperimentConfig& config, std::istream& in) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::config, "line " + std::to_string(line_no) + ": expected key = value");
    }
    set_config_value(config, line.substr(0, eq), line.substr(eq + 1));
  }
}

void load_config_file(ExperimentConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open config file " + path);
  load_config(config, in);
}

std::string serialize_config(const ExperimentConfig& config) {
  // The preset line comes first so that re-reading does not let it clobber
  // the explicit values that follow.
  std::string out = "# qwalk experiment configuration\n";
  for (const auto& key : kConfigKeys) {
    out += key + " = " + get_config_value(config, key) + "\n";
  }
  return out;
}

void save_config_file(const ExperimentConfig& config, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot write config file " + path);
  out << serialize_config(config);
  if (!out) throw Error(ErrorCode::io, "failed writing config file " + path);
}

void validate(const ExperimentConfig& c) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::config, msg); };
  if (c.t_max < 1) fail("t_max must be at least 1");
  for (int t : c.snapshots) {
    if (t < 0 || t > c.t_max) fail(fmt::format("snapshot time {} outside [0, t_max = {}]", t, c.t_max));
  }
  if (c.runs < 0) fail("runs must be positive");
  if (c.runs_weak < 1 || c.runs_strong < 1) fail("run counts must be at least 1");
  auto check_alphas = [&](const std::vector<double>& alphas) {
    for (double a : alphas) {
      if (!std::isfinite(a) || a < 0.0) fail(fmt::format("noise level {} must be >= 0", a));
    }
  };
  check_alphas(c.alphas);
  check_alphas(c.fig4_alphas);
  check_alphas(c.fig7_alphas);
  check_alphas({c.fig2_alpha, c.fig3_alpha, c.k_limit_alpha});
  for (double p : c.p_values) {
    if (!(p >= 0.0 && p <= 1.0)) fail(fmt::format("measurement probability {} outside [0, 1]", p));
  }
  if (c.workers < 1) fail("workers must be at least 1");
  for (const auto& w : {c.windows.slope, c.windows.sqrt_tail, c.windows.saturation}) {
    if (w && (w->begin < 0 || w->end > c.t_max || w->begin > w->end)) {
      fail(fmt::format("fit window {}:{} must lie inside [0, {}]", w->begin, w->end, c.t_max));
    }
  }
  if (c.out_dir.empty()) fail("output directory must not be empty");
}

}  // namespace qwalk
