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

// Exercises the library strictly through its C interface.

#include <cmath>
#include <complex>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "qwalk/qwalk.h"

namespace fs = std::filesystem;

namespace {

const qw_init kRight{QW_INIT_RIGHT, 0, 0, 0, 0};
const qw_init kSymmetric{QW_INIT_SYMMETRIC, 0, 0, 0, 0};

std::string config_value(const qw_config* c, const char* key) {
  size_t needed = 0;
  REQUIRE(qw_config_get(c, key, nullptr, 0, &needed) == QW_OK);
  std::string buf(needed, '\0');
  REQUIRE(qw_config_get(c, key, buf.data(), buf.size(), nullptr) == QW_OK);
  buf.resize(needed - 1);
  return buf;
}

}  // namespace

TEST_CASE("version and error reporting") {
  CHECK(std::strlen(qw_version()) > 0);
  qw_walker* w = nullptr;
  CHECK(qw_walker_create(&kRight, 0, &w) == QW_ERR_INVALID_ARGUMENT);
  CHECK(w == nullptr);
  CHECK(std::string(qw_last_error()).find("t_max") != std::string::npos);
  CHECK(qw_walker_create(nullptr, 5, &w) == QW_ERR_INVALID_ARGUMENT);
  const qw_init bad_kind{static_cast<qw_init_kind>(7), 0, 0, 0, 0};
  CHECK(qw_walker_create(&bad_kind, 5, &w) == QW_ERR_INVALID_ARGUMENT);
  const qw_init unnormalized{QW_INIT_CUSTOM, 1, 0, 1, 0};
  CHECK(qw_walker_create(&unnormalized, 5, &w) == QW_ERR_INVALID_ARGUMENT);
  qw_walker_destroy(nullptr);
  qw_stream_destroy(nullptr);
  qw_config_destroy(nullptr);
  qw_report_destroy(nullptr);
}

TEST_CASE("walker lifecycle and the hadamard walk") {
  qw_walker* w = nullptr;
  REQUIRE(qw_walker_create(&kRight, 3, &w) == QW_OK);
  CHECK(qw_walker_time(w) == 0);
  CHECK(qw_walker_capacity(w) == 3);
  const qw_coin h = qw_hadamard_coin();
  for (int k = 0; k < 3; ++k) REQUIRE(qw_walker_step(w, &h) == QW_OK);
  CHECK(qw_walker_step(w, &h) == QW_ERR_CAPACITY);

  std::vector<double> p(7);
  REQUIRE(qw_walker_distribution(w, p.data(), p.size()) == QW_OK);
  CHECK(p[3 + 1] == doctest::Approx(5.0 / 8));
  CHECK(p[3 + 3] == doctest::Approx(1.0 / 8));
  CHECK(qw_walker_distribution(w, p.data(), 6) == QW_ERR_INVALID_ARGUMENT);

  double norm = 0, mean = 0, second = 0;
  REQUIRE(qw_walker_norm_squared(w, &norm) == QW_OK);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-15));
  REQUIRE(qw_walker_moments(w, &mean, &second) == QW_OK);
  CHECK(mean == doctest::Approx(3 * 0.125 + 0.625 - 0.125 - 3 * 0.125));
  CHECK(second == doctest::Approx(9 * 0.25 + 0.75));

  qw_walker* copy = nullptr;
  REQUIRE(qw_walker_clone(w, &copy) == QW_OK);
  std::vector<double> rr(7), ri(7), lr(7), li(7);
  REQUIRE(qw_walker_amplitudes(copy, rr.data(), ri.data(), lr.data(), li.data(), 7) == QW_OK);
  double total = 0;
  for (int i = 0; i < 7; ++i) total += rr[i] * rr[i] + ri[i] * ri[i] + lr[i] * lr[i] + li[i] * li[i];
  CHECK(total == doctest::Approx(1.0));
  qw_walker_destroy(copy);
  qw_walker_destroy(w);
}

TEST_CASE("coins through the C interface") {
  qw_coin x{};
  REQUIRE(qw_su2_exponential(M_PI / 2, 0, 0, &x) == QW_OK);
  CHECK(std::abs(x.im[1] - 1.0) < 1e-15);
  CHECK(std::abs(x.re[0]) < 1e-15);
  CHECK(qw_su2_exponential(NAN, 0, 0, &x) == QW_ERR_INVALID_ARGUMENT);

  qw_coin id{};
  REQUIRE(qw_su2_exponential(0, 0, 0, &id) == QW_OK);
  qw_coin composed{};
  REQUIRE(qw_compose_coin(&id, &composed) == QW_OK);
  const qw_coin h = qw_hadamard_coin();
  for (int k = 0; k < 4; ++k) {
    CHECK(composed.re[k] == h.re[k]);
    CHECK(composed.im[k] == h.im[k]);
  }
}

TEST_CASE("streams and noise") {
  qw_stream* a = nullptr;
  qw_stream* b = nullptr;
  REQUIRE(qw_stream_create(42, 0, &a) == QW_OK);
  REQUIRE(qw_stream_create(42, 0, &b) == QW_OK);
  for (int k = 0; k < 10; ++k) {
    double sa[3], sb[3];
    REQUIRE(qw_draw_sample(a, 0.1, sa) == QW_OK);
    REQUIRE(qw_draw_sample(b, 0.1, sb) == QW_OK);
    CHECK(std::memcmp(sa, sb, sizeof sa) == 0);
  }
  double s[3];
  CHECK(qw_draw_sample(a, -1.0, s) == QW_ERR_INVALID_ARGUMENT);
  qw_coin c{};
  REQUIRE(qw_noisy_coin(a, 0.0, &c) == QW_OK);
  const qw_coin h = qw_hadamard_coin();
  CHECK(std::memcmp(&c, &h, sizeof c) == 0);
  qw_stream_destroy(a);
  qw_stream_destroy(b);
}

TEST_CASE("baselines through the C interface") {
  std::vector<double> p(5);
  REQUIRE(qw_classical_distribution(2, p.data(), p.size()) == QW_OK);
  CHECK(p[2] == doctest::Approx(0.5));
  CHECK(p[0] == doctest::Approx(0.25));
  CHECK(qw_classical_distribution(2, p.data(), 4) == QW_ERR_INVALID_ARGUMENT);
  CHECK(qw_classical_distribution(-2, p.data(), 5) == QW_ERR_INVALID_ARGUMENT);

  double g = 0;
  REQUIRE(qw_gaussian_density(0, 1, 0.5, &g) == QW_OK);
  CHECK(g == doctest::Approx(1 / std::sqrt(2 * M_PI)));
  CHECK(qw_gaussian_density(0, 0, 0.5, &g) == QW_ERR_DOMAIN);

  double np = 0, kp = 0;
  REQUIRE(qw_analytic_np(0.1, &np) == QW_OK);
  REQUIRE(qw_analytic_kp(0.1, &kp) == QW_OK);
  CHECK(np == doctest::Approx(0.81 / 0.19));
  CHECK(kp == doctest::Approx(std::sqrt(1 + 2 * 0.81 / 0.19)));
  CHECK(qw_analytic_np(0.0, &np) == QW_ERR_DOMAIN);

  qw_walker* w = nullptr;
  qw_stream* s = nullptr;
  REQUIRE(qw_walker_create(&kRight, 50, &w) == QW_OK);
  REQUIRE(qw_stream_create(1, 1, &s) == QW_OK);
  for (int t = 0; t < 50; ++t) REQUIRE(qw_decoherent_step(w, s, 0.5) == QW_OK);
  double norm = 0;
  qw_walker_norm_squared(w, &norm);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(qw_decoherent_step(w, s, 0.5) == QW_ERR_CAPACITY);
  CHECK(qw_decoherent_step(w, s, 2.0) == QW_ERR_INVALID_ARGUMENT);
  qw_walker_destroy(w);

  // path-sum oracle against stepping
  std::vector<qw_coin> coins(8);
  for (auto& c : coins) REQUIRE(qw_noisy_coin(s, 0.4, &c) == QW_OK);
  qw_walker* oracle = nullptr;
  qw_walker* stepped = nullptr;
  REQUIRE(qw_path_sum_oracle(&kSymmetric, coins.data(), coins.size(), &oracle) == QW_OK);
  REQUIRE(qw_walker_create(&kSymmetric, 8, &stepped) == QW_OK);
  for (const auto& c : coins) qw_walker_step(stepped, &c);
  std::vector<double> a(17), b(17);
  qw_walker_distribution(oracle, a.data(), 17);
  qw_walker_distribution(stepped, b.data(), 17);
  for (int i = 0; i < 17; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-13);
  std::vector<qw_coin> too_many(15, qw_hadamard_coin());
  qw_walker* none = nullptr;
  CHECK(qw_path_sum_oracle(&kRight, too_many.data(), too_many.size(), &none) != QW_OK);
  qw_walker_destroy(oracle);
  qw_walker_destroy(stepped);
  qw_stream_destroy(s);
}

TEST_CASE("analysis through the C interface") {
  double t2 = 0, t1 = 0;
  REQUIRE(qw_crossover_t2(1.0, 0.4505, &t2) == QW_OK);
  CHECK(t2 == doctest::Approx(4.927).epsilon(1e-3));
  CHECK(qw_crossover_t2(0.0, 0.4505, &t2) == QW_ERR_DOMAIN);
  REQUIRE(qw_crossover_t1(2.93, 0.293, &t1) == QW_OK);
  CHECK(t1 == doctest::Approx(10.0));

  const double alphas[] = {0.05, 0.1, 0.2, 0.4};
  double times[4];
  for (int i = 0; i < 4; ++i) times[i] = 0.62 * std::pow(alphas[i], -2.05);
  double c = 0, e = 0, se = -1;
  REQUIRE(qw_fit_power_law(alphas, times, 4, &c, &e, &se) == QW_OK);
  CHECK(c == doctest::Approx(0.62).epsilon(1e-10));
  CHECK(e == doctest::Approx(2.05).epsilon(1e-10));
  CHECK(se >= 0);
  CHECK(qw_fit_power_law(alphas, times, 3, &c, &e, nullptr) == QW_ERR_FIT);
}

TEST_CASE("config handles") {
  qw_config* c = nullptr;
  REQUIRE(qw_config_create(&c) == QW_OK);
  CHECK(config_value(c, "t_max") == "2000");
  REQUIRE(qw_config_apply_preset(c, "paper") == QW_OK);
  CHECK(config_value(c, "t_max") == "10000");
  CHECK(qw_config_apply_preset(c, "tiny") == QW_ERR_CONFIG);
  REQUIRE(qw_config_set(c, "alphas", "0.1,0.2") == QW_OK);
  CHECK(config_value(c, "alphas") == "0.1,0.2");
  CHECK(qw_config_set(c, "nope", "1") == QW_ERR_CONFIG);
  CHECK(qw_config_get(c, "nope", nullptr, 0, nullptr) == QW_ERR_CONFIG);

  char small[4];
  size_t needed = 0;
  REQUIRE(qw_config_get(c, "seed", small, sizeof small, &needed) == QW_OK);
  CHECK(needed == std::strlen("20050101") + 1);
  CHECK(std::string(small) == "200");

  const auto path = fs::temp_directory_path() / "qwalk_capi_config.txt";
  REQUIRE(qw_config_save_file(c, path.string().c_str()) == QW_OK);
  qw_config* d = nullptr;
  REQUIRE(qw_config_create(&d) == QW_OK);
  REQUIRE(qw_config_load_file(d, path.string().c_str()) == QW_OK);
  CHECK(config_value(d, "alphas") == "0.1,0.2");
  CHECK(config_value(d, "t_max") == "10000");
  CHECK(qw_config_load_file(d, "/nonexistent/x.cfg") == QW_ERR_IO);
  fs::remove(path);

  REQUIRE(qw_config_validate(d) == QW_OK);
  REQUIRE(qw_config_set(d, "snapshots", "20000") == QW_OK);
  CHECK(qw_config_validate(d) == QW_ERR_CONFIG);
  qw_config_destroy(c);
  qw_config_destroy(d);
}

TEST_CASE("experiments and reports") {
  const auto dir = fs::temp_directory_path() / "qwalk_capi_run";
  fs::remove_all(dir);
  qw_config* c = nullptr;
  REQUIRE(qw_config_create(&c) == QW_OK);
  REQUIRE(qw_config_set(c, "t_max", "200") == QW_OK);
  REQUIRE(qw_config_set(c, "alphas", "0.2") == QW_OK);
  REQUIRE(qw_config_set(c, "runs", "8") == QW_OK);
  REQUIRE(qw_config_set(c, "snapshots", "100,200") == QW_OK);
  REQUIRE(qw_config_set(c, "out", dir.string().c_str()) == QW_OK);

  qw_report* r = nullptr;
  REQUIRE(qw_run_experiment(c, &r) == QW_OK);
  REQUIRE(r != nullptr);
  CHECK(qw_report_file_count(r) == 5);
  for (size_t i = 0; i < qw_report_file_count(r); ++i) CHECK(fs::exists(dir / qw_report_file(r, i)));
  CHECK(qw_report_file(r, 99) == nullptr);

  bool saw_K = false;
  for (size_t i = 0; i < qw_report_fit_count(r); ++i) {
    qw_fit_record f{};
    REQUIRE(qw_report_fit(r, i, &f) == QW_OK);
    if (std::string(f.name) == "K") {
      saw_K = true;
      CHECK(f.has_alpha == 1);
      CHECK(f.alpha == 0.2);
      CHECK(f.has_window == 1);
      CHECK(f.window_begin == 100);
      CHECK(f.window_end == 200);
      CHECK(f.saturated == -1);
    }
  }
  CHECK(saw_K);
  qw_fit_record f{};
  CHECK(qw_report_fit(r, 1000, &f) == QW_ERR_INVALID_ARGUMENT);
  qw_report_destroy(r);

  const std::string moments = (dir / "moments_alpha0.2.csv").string();
  const std::string ref = (dir / "noiseless_moments.csv").string();
  const char* paths[] = {ref.c_str(), moments.c_str()};
  REQUIRE(qw_fit_moment_files(c, paths, 2, nullptr) == QW_OK);
  const char* missing[] = {"/nonexistent/m.csv"};
  CHECK(qw_fit_moment_files(c, missing, 1, nullptr) == QW_ERR_IO);

  REQUIRE(qw_run_walk(c, nullptr) == QW_OK);
  CHECK(fs::exists(dir / "walk_moments.csv"));

  REQUIRE(qw_config_set(c, "alphas", "-1") == QW_OK);
  CHECK(qw_run_experiment(c, nullptr) == QW_ERR_CONFIG);
  CHECK(qw_run_experiment(nullptr, nullptr) == QW_ERR_INVALID_ARGUMENT);
  qw_config_destroy(c);
  fs::remove_all(dir);
}
