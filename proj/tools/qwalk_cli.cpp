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

// qwalk command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qwalk/qwalk.h"

namespace {

struct Options {
  std::string config_file;
  std::string preset;
  std::vector<std::pair<std::string, std::string>> settings;  // applied in order
  std::vector<std::string> fit_windows;
  std::vector<std::string> moment_files;
};

class CliError : public std::runtime_error {
 public:
  CliError(qw_status status, const std::string& what) : std::runtime_error(what), status_(status) {}
  qw_status status() const { return status_; }

 private:
  qw_status status_;
};

void check(qw_status status, const std::string& context) {
  if (status != QW_OK) throw CliError(status, context + ": " + qw_last_error());
}

// Each flag that maps onto a config key stores its text here so that flags
// are applied after the config file and the preset.
void add_setting(CLI::App& app, Options& opts, const std::string& flag, const std::string& key,
                 const std::string& help) {
  app.add_option_function<std::string>(
      flag, [&opts, key](const std::string& v) { opts.settings.emplace_back(key, v); }, help);
}

std::vector<std::pair<std::string, std::string>> window_settings(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos)
    return {{"window_slope", spec}, {"window_sqrt", spec}, {"window_saturation", spec}};
  const std::string kind = spec.substr(0, eq);
  const std::string range = spec.substr(eq + 1);
  if (kind == "slope") return {{"window_slope", range}};
  if (kind == "sqrt") return {{"window_sqrt", range}};
  if (kind == "saturation") return {{"window_saturation", range}};
  throw CliError(QW_ERR_CONFIG, "unknown fit window kind '" + kind + "' (slope, sqrt, saturation)");
}

struct ConfigHandle {
  qw_config* ptr = nullptr;
  ConfigHandle() { check(qw_config_create(&ptr), "config"); }
  ~ConfigHandle() { qw_config_destroy(ptr); }
  ConfigHandle(const ConfigHandle&) = delete;
  ConfigHandle& operator=(const ConfigHandle&) = delete;
};

struct ReportHandle {
  qw_report* ptr = nullptr;
  ~ReportHandle() { qw_report_destroy(ptr); }
};

void build_config(const Options& opts, const std::string& mode, qw_config* config) {
  if (!opts.config_file.empty()) check(qw_config_load_file(config, opts.config_file.c_str()), "--config");
  if (!opts.preset.empty()) check(qw_config_apply_preset(config, opts.preset.c_str()), "--preset");
  if (!mode.empty()) check(qw_config_set(config, "mode", mode.c_str()), "mode");
  for (const auto& [key, value] : opts.settings)
    check(qw_config_set(config, key.c_str(), value.c_str()), "--" + key);
  for (const auto& spec : opts.fit_windows)
    for (const auto& [key, value] : window_settings(spec))
      check(qw_config_set(config, key.c_str(), value.c_str()), "--fit-window");
  check(qw_config_validate(config), "invalid configuration");
}

void print_report(const qw_report* report) {
  for (size_t i = 0; i < qw_report_file_count(report); ++i)
    std::printf("wrote %s\n", qw_report_file(report, i));
  for (size_t i = 0; i < qw_report_fit_count(report); ++i) {
    qw_fit_record r;
    if (qw_report_fit(report, i, &r) != QW_OK) continue;
    std::string line = r.name;
    if (r.has_alpha) line += "[" + CLI::detail::to_string(r.alpha) + "]";
    char value[64];
    std::snprintf(value, sizeof value, " = %.10g", r.value);
    line += value;
    if (r.has_std_error) {
      std::snprintf(value, sizeof value, " +/- %.3g", r.std_error);
      line += value;
    }
    if (r.has_window) line += " over [" + std::to_string(r.window_begin) + ", " + std::to_string(r.window_end) + "]";
    if (r.saturated == 0) line += " (not saturated)";
    std::printf("%s\n", line.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hadamard quantum walk under unitary coin noise"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qw_version()));

  Options opts;
  app.add_option("--config", opts.config_file, "key = value configuration file")->check(CLI::ExistingFile);
  app.add_option("--preset", opts.preset, "scale preset: desk or paper");
  add_setting(app, opts, "--alpha", "alphas", "noise level(s), comma separated");
  add_setting(app, opts, "--p", "p", "measurement probability(ies), comma separated");
  add_setting(app, opts, "--tmax", "t_max", "number of steps");
  add_setting(app, opts, "--runs", "runs", "runs per noise level (overrides the preset)");
  add_setting(app, opts, "--seed", "seed", "master seed");
  add_setting(app, opts, "--init", "init", "symmetric | right | custom:cr_re,cr_im,cl_re,cl_im");
  add_setting(app, opts, "--snapshots", "snapshots", "distribution snapshot times, comma separated");
  add_setting(app, opts, "--workers", "workers", "worker threads");
  add_setting(app, opts, "--out", "out", "output directory");
  app.add_option("--fit-window", opts.fit_windows,
                 "[slope=|sqrt=|saturation=]BEGIN:END, or auto; bare form sets all three")
      ->take_all()
      ->allow_extra_args(false);

  struct Sub {
    const char* name;
    const char* mode;
    const char* help;
  };
  const Sub subs[] = {
      {"walk", "", "single trajectory: distributions and moments of run 0"},
      {"ensemble", "noisy", "noise-averaged sweep over --alpha"},
      {"classical", "classical", "exact classical random walk"},
      {"decoherent", "decoherent", "measurement-channel trajectories over --p"},
      {"fit", "", "re-analyze stored moment files"},
      {"figures", "", "datasets for every figure"},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help)->fallthrough();
    if (std::string(s.name) == "fit")
      sub->add_option("files", opts.moment_files, "moment CSV files")->required()->check(CLI::ExistingFile);
  }

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  std::string mode;
  for (const auto& s : subs)
    if (command == s.name) mode = s.mode;

  try {
    ConfigHandle config;
    build_config(opts, mode, config.ptr);
    ReportHandle report;
    if (command == "walk") {
      check(qw_run_walk(config.ptr, &report.ptr), "walk");
    } else if (command == "figures") {
      check(qw_reproduce_figures(config.ptr, &report.ptr), "figures");
    } else if (command == "fit") {
      std::vector<const char*> paths;
      for (const auto& f : opts.moment_files) paths.push_back(f.c_str());
      check(qw_fit_moment_files(config.ptr, paths.data(), paths.size(), &report.ptr), "fit");
    } else {
      check(qw_run_experiment(config.ptr, &report.ptr), command);
    }
    print_report(report.ptr);
  } catch (const CliError& e) {
    std::fprintf(stderr, "qwalk: error: %s\n", e.what());
    return e.status() == QW_ERR_INTERNAL ? 70 : static_cast<int>(e.status());
  }
  return 0;
}
