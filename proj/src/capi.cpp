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

#include "qwalk/qwalk.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "baselines.hpp"
#include "config.hpp"
#include "error.hpp"
#include "experiment.hpp"
#include "noise.hpp"
#include "walker.hpp"

struct qw_walker {
  qwalk::WalkerState state;
};

struct qw_stream {
  qwalk::RandomStream stream;
};

struct qw_config {
  qwalk::ExperimentConfig config;
};

struct qw_report {
  qwalk::ExperimentReport report;
};

namespace {

thread_local std::string last_error;

qw_status to_status(qwalk::ErrorCode code) {
  using qwalk::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return QW_ERR_INVALID_ARGUMENT;
    case ErrorCode::capacity_exceeded: return QW_ERR_CAPACITY;
    case ErrorCode::domain: return QW_ERR_DOMAIN;
    case ErrorCode::io: return QW_ERR_IO;
    case ErrorCode::config: return QW_ERR_CONFIG;
    case ErrorCode::fit_failed: return QW_ERR_FIT;
    case ErrorCode::not_saturated: return QW_ERR_NOT_SATURATED;
    case ErrorCode::mismatch: return QW_ERR_MISMATCH;
  }
  return QW_ERR_INTERNAL;
}

qw_status fail(qw_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
qw_status guarded(F&& body) {
  try {
    body();
    return QW_OK;
  } catch (const qwalk::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(QW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QW_ERR_INTERNAL, "unknown error");
  }
}

#define QW_REQUIRE(cond, what)                                  \
  do {                                                          \
    if (!(cond)) return fail(QW_ERR_INVALID_ARGUMENT, (what)); \
  } while (0)

qwalk::CoinMatrix from_c(const qw_coin& c) {
  qwalk::CoinMatrix m;
  for (int k = 0; k < 4; ++k) m.m[static_cast<std::size_t>(k)] = {c.re[k], c.im[k]};
  return m;
}

qw_coin to_c(const qwalk::CoinMatrix& m) {
  qw_coin c{};
  for (int k = 0; k < 4; ++k) {
    c.re[k] = m.m[static_cast<std::size_t>(k)].real();
    c.im[k] = m.m[static_cast<std::size_t>(k)].imag();
  }
  return c;
}

qwalk::InitialCondition from_c(const qw_init& init) {
  switch (init.kind) {
    case QW_INIT_SYMMETRIC: return qwalk::SymmetricOrigin{};
    case QW_INIT_RIGHT: return qwalk::RightOrigin{};
    case QW_INIT_CUSTOM:
      return qwalk::CustomOrigin{{init.cr_re, init.cr_im}, {init.cl_re, init.cl_im}};
  }
  throw qwalk::Error(qwalk::ErrorCode::invalid_argument, "unknown initial condition kind");
}

std::size_t sites_of(const qw_walker* w) {
  return static_cast<std::size_t>(2 * w->state.capacity() + 1);
}

template <typename Run>
qw_status run_report(const qw_config* config, qw_report** report, Run&& run) {
  QW_REQUIRE(config, "config is null");
  return guarded([&] {
    auto result = run(config->config);
    if (report) *report = new qw_report{std::move(result)};
  });
}

}  // namespace

extern "C" {

const char* qw_last_error(void) { return last_error.c_str(); }
const char* qw_version(void) { return "1.0.0"; }

qw_status qw_walker_create(const qw_init* init, int t_max, qw_walker** out) {
  QW_REQUIRE(init && out, "null argument");
  return guarded([&] { *out = new qw_walker{qwalk::WalkerState(from_c(*init), t_max)}; });
}

void qw_walker_destroy(qw_walker* walker) { delete walker; }

qw_status qw_walker_clone(const qw_walker* walker, qw_walker** out) {
  QW_REQUIRE(walker && out, "null argument");
  return guarded([&] { *out = new qw_walker{*walker}; });
}

qw_status qw_walker_step(qw_walker* walker, const qw_coin* coin) {
  QW_REQUIRE(walker && coin, "null argument");
  return guarded([&] { walker->state.step(from_c(*coin)); });
}

int qw_walker_time(const qw_walker* walker) { return walker ? walker->state.time() : -1; }
int qw_walker_capacity(const qw_walker* walker) { return walker ? walker->state.capacity() : -1; }

qw_status qw_walker_distribution(const qw_walker* walker, double* probs, size_t sites) {
  QW_REQUIRE(walker && probs, "null argument");
  QW_REQUIRE(sites == sites_of(walker), "buffer length must be 2 t_max + 1");
  return guarded([&] { qwalk::distribution_into(walker->state, {probs, sites}); });
}

qw_status qw_walker_amplitudes(const qw_walker* walker, double* right_re, double* right_im,
                               double* left_re, double* left_im, size_t sites) {
  QW_REQUIRE(walker && right_re && right_im && left_re && left_im, "null argument");
  QW_REQUIRE(sites == sites_of(walker), "buffer length must be 2 t_max + 1");
  const auto r = walker->state.right();
  const auto l = walker->state.left();
  for (std::size_t i = 0; i < sites; ++i) {
    right_re[i] = r[i].real();
    right_im[i] = r[i].imag();
    left_re[i] = l[i].real();
    left_im[i] = l[i].imag();
  }
  return QW_OK;
}

qw_status qw_walker_norm_squared(const qw_walker* walker, double* out) {
  QW_REQUIRE(walker && out, "null argument");
  *out = walker->state.norm_squared();
  return QW_OK;
}

qw_status qw_walker_moments(const qw_walker* walker, double* mean, double* second) {
  QW_REQUIRE(walker && mean && second, "null argument");
  const auto m = qwalk::moments(walker->state);
  *mean = m.mean;
  *second = m.second;
  return QW_OK;
}

qw_coin qw_hadamard_coin(void) { return to_c(qwalk::hadamard_coin()); }

qw_status qw_su2_exponential(double a1, double a2, double a3, qw_coin* out) {
  QW_REQUIRE(out, "null argument");
  QW_REQUIRE(std::isfinite(a1) && std::isfinite(a2) && std::isfinite(a3),
             "Pauli coefficients must be finite");
  *out = to_c(qwalk::su2_exponential(a1, a2, a3));
  return QW_OK;
}

qw_status qw_compose_coin(const qw_coin* noise, qw_coin* out) {
  QW_REQUIRE(noise && out, "null argument");
  *out = to_c(qwalk::compose_coin(from_c(*noise)));
  return QW_OK;
}

qw_status qw_stream_create(uint64_t master_seed, uint64_t run_index, qw_stream** out) {
  QW_REQUIRE(out, "null argument");
  return guarded([&] { *out = new qw_stream{qwalk::derive_run_stream(master_seed, run_index)}; });
}

void qw_stream_destroy(qw_stream* stream) { delete stream; }

qw_status qw_draw_sample(qw_stream* stream, double alpha, double sample[3]) {
  QW_REQUIRE(stream && sample, "null argument");
  return guarded([&] {
    const auto s = qwalk::draw_sample(stream->stream, {alpha, 0});
    sample[0] = s.alpha1;
    sample[1] = s.alpha2;
    sample[2] = s.alpha3;
  });
}

qw_status qw_noisy_coin(qw_stream* stream, double alpha, qw_coin* out) {
  QW_REQUIRE(stream && out, "null argument");
  return guarded([&] { *out = to_c(qwalk::noisy_coin(stream->stream, {alpha, 0})); });
}

qw_status qw_classical_distribution(int t, double* probs, size_t sites) {
  QW_REQUIRE(probs, "null argument");
  QW_REQUIRE(t >= 0, "time must be non-negative");
  const std::size_t want = static_cast<std::size_t>(2 * std::max(t, 1) + 1);
  QW_REQUIRE(sites == want, "buffer length must be 2 max(t, 1) + 1");
  return guarded([&] {
    const auto snap = qwalk::classical_distribution(t);
    std::memcpy(probs, snap.probs.data(), sites * sizeof(double));
  });
}

qw_status qw_gaussian_density(double n, double t, double diffusion, double* out) {
  QW_REQUIRE(out, "null argument");
  return guarded([&] { *out = qwalk::gaussian_density(n, t, diffusion); });
}

qw_status qw_decoherent_step(qw_walker* walker, qw_stream* stream, double p) {
  QW_REQUIRE(walker && stream, "null argument");
  return guarded([&] { qwalk::decoherent_step(walker->state, stream->stream, {p}); });
}

qw_status qw_analytic_np(double p, double* out) {
  QW_REQUIRE(out, "null argument");
  return guarded([&] { *out = qwalk::analytic_np(p); });
}

qw_status qw_analytic_kp(double p, double* out) {
  QW_REQUIRE(out, "null argument");
  return guarded([&] { *out = qwalk::analytic_Kp(p); });
}

qw_status qw_path_sum_oracle(const qw_init* init, const qw_coin* coins, size_t count,
                             qw_walker** out) {
  QW_REQUIRE(init && out && (coins || count == 0), "null argument");
  return guarded([&] {
    std::vector<qwalk::CoinMatrix> seq;
    for (std::size_t k = 0; k < count; ++k) seq.push_back(from_c(coins[k]));
    *out = new qw_walker{qwalk::path_sum_oracle(from_c(*init), seq)};
  });
}

qw_status qw_crossover_t2(double K, double q, double* out) {
  QW_REQUIRE(out, "null argument");
  return guarded([&] { *out = qwalk::crossover_T2(K, q); });
}

qw_status qw_crossover_t1(double n_alpha, double v, double* out) {
  QW_REQUIRE(out, "null argument");
  return guarded([&] { *out = qwalk::crossover_T1(n_alpha, v); });
}

qw_status qw_fit_power_law(const double* alphas, const double* times, size_t count, double* c,
                           double* exponent, double* exponent_stderr) {
  QW_REQUIRE(alphas && times && c && exponent, "null argument");
  return guarded([&] {
    std::vector<std::pair<double, double>> points;
    for (std::size_t i = 0; i < count; ++i) points.emplace_back(alphas[i], times[i]);
    const auto law = qwalk::fit_power_law(points);
    *c = law.c;
    *exponent = law.exponent;
    if (exponent_stderr) *exponent_stderr = law.exponent_stderr;
  });
}

qw_status qw_config_create(qw_config** out) {
  QW_REQUIRE(out, "null argument");
  return guarded([&] { *out = new qw_config{}; });
}

void qw_config_destroy(qw_config* config) { delete config; }

qw_status qw_config_apply_preset(qw_config* config, const char* name) {
  QW_REQUIRE(config && name, "null argument");
  return guarded([&] { qwalk::apply_preset(config->config, name); });
}

qw_status qw_config_set(qw_config* config, const char* key, const char* value) {
  QW_REQUIRE(config && key && value, "null argument");
  return guarded([&] { qwalk::set_config_value(config->config, key, value); });
}

qw_status qw_config_get(const qw_config* config, const char* key, char* buffer, size_t size,
                        size_t* needed) {
  QW_REQUIRE(config && key, "null argument");
  return guarded([&] {
    const std::string value = qwalk::get_config_value(config->config, key);
    if (needed) *needed = value.size() + 1;
    if (buffer && size > 0) {
      const std::size_t n = std::min(size - 1, value.size());
      std::memcpy(buffer, value.data(), n);
      buffer[n] = '\0';
    }
  });
}

qw_status qw_config_load_file(qw_config* config, const char* path) {
  QW_REQUIRE(config && path, "null argument");
  return guarded([&] { qwalk::load_config_file(config->config, path); });
}

qw_status qw_config_save_file(const qw_config* config, const char* path) {
  QW_REQUIRE(config && path, "null argument");
  return guarded([&] { qwalk::save_config_file(config->config, path); });
}

qw_status qw_config_validate(const qw_config* config) {
  QW_REQUIRE(config, "null argument");
  return guarded([&] { qwalk::validate(config->config); });
}

qw_status qw_run_experiment(const qw_config* config, qw_report** report) {
  return run_report(config, report, [](const auto& c) { return qwalk::run_experiment(c); });
}

qw_status qw_run_walk(const qw_config* config, qw_report** report) {
  return run_report(config, report, [](const auto& c) { return qwalk::run_walk(c); });
}

qw_status qw_reproduce_figures(const qw_config* config, qw_report** report) {
  return run_report(config, report, [](const auto& c) { return qwalk::reproduce_figures(c); });
}

qw_status qw_fit_moment_files(const qw_config* config, const char* const* paths, size_t count,
                              qw_report** report) {
  QW_REQUIRE(paths || count == 0, "null argument");
  std::vector<std::string> files;
  for (std::size_t i = 0; i < count; ++i) {
    QW_REQUIRE(paths[i], "null path");
    files.emplace_back(paths[i]);
  }
  return run_report(config, report,
                    [&](const auto& c) { return qwalk::fit_moment_files(c, files); });
}

size_t qw_report_file_count(const qw_report* report) {
  return report ? report->report.files.size() : 0;
}

const char* qw_report_file(const qw_report* report, size_t index) {
  if (!report || index >= report->report.files.size()) return nullptr;
  return report->report.files[index].c_str();
}

size_t qw_report_fit_count(const qw_report* report) {
  return report ? report->report.fits.size() : 0;
}

qw_status qw_report_fit(const qw_report* report, size_t index, qw_fit_record* out) {
  QW_REQUIRE(report && out, "null argument");
  QW_REQUIRE(index < report->report.fits.size(), "fit index out of range");
  const auto& r = report->report.fits[index];
  out->name = r.name.c_str();
  out->has_alpha = r.alpha.has_value();
  out->alpha = r.alpha.value_or(0.0);
  out->value = r.value;
  out->has_std_error = r.std_error.has_value();
  out->std_error = r.std_error.value_or(0.0);
  out->has_window = r.window.has_value();
  out->window_begin = r.window ? r.window->begin : 0;
  out->window_end = r.window ? r.window->end : 0;
  out->saturated = r.saturated ? (*r.saturated ? 1 : 0) : -1;
  return QW_OK;
}

void qw_report_destroy(qw_report* report) { delete report; }

}  // extern "C"
