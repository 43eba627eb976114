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

#ifndef QWALK_QWALK_H_
#define QWALK_QWALK_H_

/*
 * C interface to the qwalk library: the discrete Hadamard walk under
 * unitary coin noise, classical and decohered baselines, ensemble
 * experiments and crossover analysis.
 *
 * Objects are opaque handles created by qw_*_create and released by the
 * matching qw_*_destroy. Every fallible call returns a qw_status; on failure
 * qw_last_error() describes the problem for the calling thread until that
 * thread's next failing call.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(QWALK_BUILDING_LIBRARY)
#    define QWALK_API __declspec(dllexport)
#  else
#    define QWALK_API __declspec(dllimport)
#  endif
#else
#  define QWALK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qw_status {
  QW_OK = 0,
  QW_ERR_INVALID_ARGUMENT = 1,
  QW_ERR_CAPACITY = 2,      /* step beyond the walker's t_max */
  QW_ERR_DOMAIN = 3,        /* argument outside a formula's domain */
  QW_ERR_IO = 4,
  QW_ERR_CONFIG = 5,        /* invalid experiment configuration */
  QW_ERR_FIT = 6,           /* degenerate or too short fit window */
  QW_ERR_NOT_SATURATED = 7, /* mean still drifting across the window */
  QW_ERR_MISMATCH = 8,      /* snapshots taken at different times */
  QW_ERR_INTERNAL = 99
} qw_status;

QWALK_API const char* qw_last_error(void);
QWALK_API const char* qw_version(void);

/* 2x2 chirality operator in the (|R>, |L>) basis, row-major: RR, RL, LR, LL. */
typedef struct qw_coin {
  double re[4];
  double im[4];
} qw_coin;

typedef enum qw_init_kind {
  QW_INIT_SYMMETRIC = 0, /* (|0,R> + i|0,L>) / sqrt(2) */
  QW_INIT_RIGHT = 1,     /* |0,R> */
  QW_INIT_CUSTOM = 2     /* c_R |0,R> + c_L |0,L>, |c_R|^2 + |c_L|^2 = 1 */
} qw_init_kind;

typedef struct qw_init {
  qw_init_kind kind;
  double cr_re, cr_im, cl_re, cl_im; /* used by QW_INIT_CUSTOM only */
} qw_init;

/* ---- walker --------------------------------------------------------- */

typedef struct qw_walker qw_walker;

QWALK_API qw_status qw_walker_create(const qw_init* init, int t_max, qw_walker** out);
QWALK_API void qw_walker_destroy(qw_walker* walker);
QWALK_API qw_status qw_walker_clone(const qw_walker* walker, qw_walker** out);

/* Applies the coin to every site, then shifts R right and L left. */
QWALK_API qw_status qw_walker_step(qw_walker* walker, const qw_coin* coin);
QWALK_API int qw_walker_time(const qw_walker* walker);
QWALK_API int qw_walker_capacity(const qw_walker* walker);

/* Arrays are indexed by n + t_max and hold 2 t_max + 1 sites. */
QWALK_API qw_status qw_walker_distribution(const qw_walker* walker, double* probs, size_t sites);
QWALK_API qw_status qw_walker_amplitudes(const qw_walker* walker, double* right_re, double* right_im,
                                         double* left_re, double* left_im, size_t sites);
QWALK_API qw_status qw_walker_norm_squared(const qw_walker* walker, double* out);
QWALK_API qw_status qw_walker_moments(const qw_walker* walker, double* mean, double* second);

/* ---- coins and noise ------------------------------------------------ */

QWALK_API qw_coin qw_hadamard_coin(void);
/* exp(i (a1 sigma_1 + a2 sigma_2 + a3 sigma_3)) */
QWALK_API qw_status qw_su2_exponential(double a1, double a2, double a3, qw_coin* out);
/* Hadamard * noise: the noise rotation acts first. */
QWALK_API qw_status qw_compose_coin(const qw_coin* noise, qw_coin* out);

typedef struct qw_stream qw_stream;

/* Counter-based stream; equal (seed, run_index) pairs replay identically. */
QWALK_API qw_status qw_stream_create(uint64_t master_seed, uint64_t run_index, qw_stream** out);
QWALK_API void qw_stream_destroy(qw_stream* stream);
QWALK_API qw_status qw_draw_sample(qw_stream* stream, double alpha, double sample[3]);
QWALK_API qw_status qw_noisy_coin(qw_stream* stream, double alpha, qw_coin* out);

/* ---- baselines ------------------------------------------------------ */

/* probs receives 2 t + 1 entries indexed by n + t (at least one site). */
QWALK_API qw_status qw_classical_distribution(int t, double* probs, size_t sites);
QWALK_API qw_status qw_gaussian_density(double n, double t, double diffusion, double* out);
QWALK_API qw_status qw_decoherent_step(qw_walker* walker, qw_stream* stream, double p);
QWALK_API qw_status qw_analytic_np(double p, double* out);
QWALK_API qw_status qw_analytic_kp(double p, double* out);
/* Sums all 2^t chirality histories; count <= 14. */
QWALK_API qw_status qw_path_sum_oracle(const qw_init* init, const qw_coin* coins, size_t count,
                                       qw_walker** out);

/* ---- analysis ------------------------------------------------------- */

QWALK_API qw_status qw_crossover_t2(double K, double q, double* out);
QWALK_API qw_status qw_crossover_t1(double n_alpha, double v, double* out);
/* Least squares on (ln alpha, ln T): T = c alpha^(-exponent). */
QWALK_API qw_status qw_fit_power_law(const double* alphas, const double* times, size_t count,
                                     double* c, double* exponent, double* exponent_stderr);

/* ---- experiments ---------------------------------------------------- */

typedef struct qw_config qw_config;

QWALK_API qw_status qw_config_create(qw_config** out);
QWALK_API void qw_config_destroy(qw_config* config);
QWALK_API qw_status qw_config_apply_preset(qw_config* config, const char* name);
/* Keys as in the config file format, e.g. "t_max", "alphas", "init". */
QWALK_API qw_status qw_config_set(qw_config* config, const char* key, const char* value);
/* Copies the value with a terminating NUL; *needed receives the full length + 1. */
QWALK_API qw_status qw_config_get(const qw_config* config, const char* key, char* buffer,
                                  size_t size, size_t* needed);
QWALK_API qw_status qw_config_load_file(qw_config* config, const char* path);
QWALK_API qw_status qw_config_save_file(const qw_config* config, const char* path);
QWALK_API qw_status qw_config_validate(const qw_config* config);

typedef struct qw_report qw_report;

typedef struct qw_fit_record {
  const char* name; /* owned by the report */
  int has_alpha;
  double alpha;
  double value;
  int has_std_error;
  double std_error;
  int has_window;
  int window_begin;
  int window_end;
  int saturated; /* -1 when not applicable */
} qw_fit_record;

/* `report` may be NULL when the caller only wants the files. */
QWALK_API qw_status qw_run_experiment(const qw_config* config, qw_report** report);
QWALK_API qw_status qw_run_walk(const qw_config* config, qw_report** report);
QWALK_API qw_status qw_reproduce_figures(const qw_config* config, qw_report** report);
QWALK_API qw_status qw_fit_moment_files(const qw_config* config, const char* const* paths,
                                        size_t count, qw_report** report);

QWALK_API size_t qw_report_file_count(const qw_report* report);
QWALK_API const char* qw_report_file(const qw_report* report, size_t index);
QWALK_API size_t qw_report_fit_count(const qw_report* report);
QWALK_API qw_status qw_report_fit(const qw_report* report, size_t index, qw_fit_record* out);
QWALK_API void qw_report_destroy(qw_report* report);

#ifdef __cplusplus
}
#endif

#endif /* QWALK_QWALK_H_ */
