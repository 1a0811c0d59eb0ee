// Copyright 2026 The Authors.
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

// Checked-in benchmark and property sweeps.
//
//   lemma        correlation lower bounds, volume-sampling bound, deflation
//                identity, eigenvector perturbation, sensitivity ordering
//   error-ratio  projection error relative to random selection, K = 1..10
//   runtime      IPM wall clock versus M, and against PAM
//   outlier      how many appended outlier rows each method selects
//
// Every check carries its threshold next to its measurement.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "subsel/baselines.hpp"
#include "subsel/datagen.hpp"
#include "subsel/metrics.hpp"
#include "subsel/random.hpp"
#include "subsel/selection.hpp"

namespace subsel {

struct SuiteCheck {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  std::string relation;  // how measured must compare with threshold
  double threshold = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  std::vector<std::pair<std::string, double>> measurements;  // informational
  double elapsed_seconds = 0.0;
  unsigned threads = 1;
  std::string build;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
  }
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  // lemma
  int lemma_matrices = 1000;
  int lemma_ipm_runs = 100;
  Index lemma_max_dim = 40;
  int bound_matrices = 200;
  int identity_runs = 100;
  int perturbation_pairs = 200;
  int spectra = 100;
  // error-ratio
  int error_trials = 100;
  int random_draws = 10;
  Index error_max_k = 10;
  // runtime
  std::vector<Index> runtime_sizes = {500, 1000, 2000, 4000, 8000};
  Index runtime_n = 64;
  Index runtime_k = 10;
  int runtime_reps = 3;
  Index pam_size = 4000;
  // outlier
  int outlier_trials = 20;
};

namespace detail {

inline SuiteCheck at_least(std::string name, double measured, double threshold, std::string detail = {}) {
  return {std::move(name), measured >= threshold, measured, ">=", threshold, std::move(detail)};
}

inline SuiteCheck at_most(std::string name, double measured, double threshold, std::string detail = {}) {
  return {std::move(name), measured <= threshold, measured, "<=", threshold, std::move(detail)};
}

inline SuiteCheck below(std::string name, double measured, double threshold, std::string detail = {}) {
  return {std::move(name), measured < threshold, measured, "<", threshold, std::move(detail)};
}

inline Matrix gaussian_matrix(Index m, Index n, Rng& rng) {
  Matrix a(m, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < m; ++i) a(i, j) = rng.normal();
  }
  return a;
}

inline Matrix select_rows(const Matrix& a, const std::vector<bool>& keep) {
  Index count = 0;
  for (bool k : keep) count += k ? 1 : 0;
  Matrix out(count, a.cols());
  Index r = 0;
  for (Index i = 0; i < a.rows(); ++i) {
    if (keep[static_cast<std::size_t>(i)]) out.row(r++) = a.row(i);
  }
  return out;
}

inline std::string build_stamp() {
  std::string s = "compiler " __VERSION__;
#ifdef NDEBUG
  s += ", release";
#else
  s += ", debug";
#endif
  return s;
}

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

/// Row-correlation lower bound (raw rows) and the ROM bound (unit rows) on seeded Gaussian
/// matrices and on every live residual matrix of seeded IPM runs.
inline std::vector<SuiteCheck> correlation_bound_checks(const SuiteOptions& o) {
  double lemma_random = std::numeric_limits<double>::infinity();
  double rom_random = std::numeric_limits<double>::infinity();
  for (int t = 0; t < o.lemma_matrices; ++t) {
    Rng rng(Rng::mix(o.seed) + static_cast<std::uint64_t>(t));
    const Index m = 1 + static_cast<Index>(rng.index(static_cast<std::uint64_t>(o.lemma_max_dim)));
    const Index n = 1 + static_cast<Index>(rng.index(static_cast<std::uint64_t>(o.lemma_max_dim)));
    const Matrix a = detail::gaussian_matrix(m, n, rng);
    lemma_random = std::min(lemma_random, check_lemma1(a));
    rom_random = std::min(rom_random, check_rom_bound(a));
  }

  double lemma_ipm = std::numeric_limits<double>::infinity();
  double rom_ipm = std::numeric_limits<double>::infinity();
  int steps = 0;
  for (int t = 0; t < o.lemma_ipm_runs; ++t) {
    Rng rng(Rng::mix(o.seed + 1) + static_cast<std::uint64_t>(t));
    const Index m = 2 + static_cast<Index>(rng.index(static_cast<std::uint64_t>(o.lemma_max_dim - 1)));
    const Index n = 2 + static_cast<Index>(rng.index(static_cast<std::uint64_t>(o.lemma_max_dim - 1)));
    const DataMatrix a(detail::gaussian_matrix(m, n, rng));
    IpmOptions opts;
    opts.power.seed = static_cast<std::uint64_t>(t);
    opts.observer = [&](const IpmStep& step) {
      const Matrix live = detail::select_rows(step.residual, step.live);
      lemma_ipm = std::min(lemma_ipm, check_lemma1(live));
      rom_ipm = std::min(rom_ipm, check_rom_bound(live));
      ++steps;
    };
    ipm_select(a, std::min(m, n), opts);
  }

  const std::string random_detail = std::to_string(o.lemma_matrices) + " Gaussian matrices, M, N <= " +
                                     std::to_string(o.lemma_max_dim);
  const std::string ipm_detail = std::to_string(steps) + " IPM steps over " + std::to_string(o.lemma_ipm_runs) + " runs";
  return {detail::at_least("correlation_margin_random", lemma_random, -1e-9, random_detail),
          detail::at_least("correlation_margin_ipm_steps", lemma_ipm, -1e-9, ipm_detail),
          detail::at_least("rom_bound_margin_random", rom_random, -1e-9, random_detail),
          detail::at_least("rom_bound_margin_ipm_steps", rom_ipm, -1e-9, ipm_detail)};
}

/// Row-correlation bound only.
inline std::vector<SuiteCheck> correlation_checks(const SuiteOptions& o) {
  auto all = correlation_bound_checks(o);
  return {all[0], all[1]};
}

/// Expected volume-sampling error against (K + 1) |A - A_K|^2 by full
/// enumeration, all K <= 3 on matrices with M <= 8.
inline SuiteCheck volume_bound_check(const SuiteOptions& o) {
  double worst = -std::numeric_limits<double>::infinity();
  int cases = 0;
  for (int t = 0; t < o.bound_matrices; ++t) {
    Rng rng(Rng::mix(o.seed + 2) + static_cast<std::uint64_t>(t));
    const Index m = 2 + static_cast<Index>(rng.index(7));  // 2..8
    const Index n = 3 + static_cast<Index>(rng.index(4));  // 3..6
    const DataMatrix a(detail::gaussian_matrix(m, n, rng));
    for (Index k = 1; k <= std::min<Index>(3, m); ++k) {
      const BoundCheck c = check_vs_bound(a, k);
      worst = std::max(worst, c.lhs - c.rhs);
      ++cases;
    }
  }
  return detail::at_most("volume_bound_excess", worst, 1e-9,
                         "max(lhs - rhs) over " + std::to_string(cases) + " (matrix, K) cases");
}

/// Final IPM residual energy against an independent projection of A onto
/// the span of the selected original rows.
inline SuiteCheck deflation_identity_check(const SuiteOptions& o) {
  double worst = 0.0;
  for (int t = 0; t < o.identity_runs; ++t) {
    Rng rng(Rng::mix(o.seed + 3) + static_cast<std::uint64_t>(t));
    const Index m = 10 + static_cast<Index>(rng.index(31));  // 10..40
    const Index n = 5 + static_cast<Index>(rng.index(16));   // 5..20
    const Index k = 1 + static_cast<Index>(rng.index(static_cast<std::uint64_t>(std::min(m, n) - 1)));
    const DataMatrix a(detail::gaussian_matrix(m, n, rng));
    IpmOptions opts;
    opts.power.seed = static_cast<std::uint64_t>(t);
    const SelectionResult r = ipm_select(a, k, opts);
    const double independent = projection_error(a, r.indices);
    worst = std::max(worst, std::abs(r.residual_energies.back() - independent) / independent);
  }
  return detail::at_most("deflation_identity_rel_error", worst, 1e-7,
                         std::to_string(o.identity_runs) + " IPM runs, K < min(M, N)");
}

struct PerturbationCase {
  Matrix c;
  Matrix direction;  // symmetric, unit Frobenius norm
  Index i = 0;
};

inline PerturbationCase random_perturbation_case(Rng& rng) {
  const Index n = 2 + static_cast<Index>(rng.index(5));  // 2..6
  std::vector<double> lambda;
  while (true) {
    lambda.clear();
    for (Index j = 0; j < n; ++j) lambda.push_back(10.0 * rng.uniform());
    std::sort(lambda.rbegin(), lambda.rend());
    double gap = std::numeric_limits<double>::infinity();
    for (Index j = 0; j + 1 < n; ++j) gap = std::min(gap, lambda[static_cast<std::size_t>(j)] - lambda[static_cast<std::size_t>(j + 1)]);
    if (gap >= 0.1) break;
  }
  const Matrix q = random_orthonormal(n, n, rng);
  const Vector l = Eigen::Map<const Vector>(lambda.data(), n);
  PerturbationCase pc;
  pc.c = q * l.asDiagonal() * q.transpose();
  pc.c = 0.5 * (pc.c + pc.c.transpose()).eval();
  Matrix d = detail::gaussian_matrix(n, n, rng);
  d = 0.5 * (d + d.transpose()).eval();
  pc.direction = d / d.norm();
  pc.i = static_cast<Index>(rng.index(static_cast<std::uint64_t>(n)));
  return pc;
}

/// Eigenvector motion within 5% of s_i |dC|_F at |dC| = 1e-6, and first-order
/// convergence: the finite-difference ratio |dv| / |dC| is closer to the
/// exact derivative at |dC| = 1e-7 than at 1e-6.
inline std::vector<SuiteCheck> perturbation_checks(const SuiteOptions& o) {
  double worst_ratio = 0.0;
  int not_converging = 0;
  int literal_ordering = 0;
  for (int t = 0; t < o.perturbation_pairs; ++t) {
    Rng rng(Rng::mix(o.seed + 4) + static_cast<std::uint64_t>(t));
    const PerturbationCase pc = random_perturbation_case(rng);
    const PerturbationCheck coarse = check_eigvec_perturbation(pc.c, 1e-6 * pc.direction, pc.i);
    const PerturbationCheck fine = check_eigvec_perturbation(pc.c, 1e-7 * pc.direction, pc.i);
    worst_ratio = std::max(worst_ratio, coarse.lhs / coarse.bound);
    const double r_coarse = coarse.lhs / coarse.delta_norm;
    const double r_fine = fine.lhs / fine.delta_norm;
    const double limit = coarse.first_order / coarse.delta_norm;
    if (std::abs(r_fine - limit) > std::abs(r_coarse - limit)) ++not_converging;
    if (r_fine / fine.bound * fine.delta_norm <= r_coarse / coarse.bound * coarse.delta_norm) ++literal_ordering;
  }
  const std::string pairs = std::to_string(o.perturbation_pairs) + " (C, dC) pairs";
  return {detail::at_most("eigvec_motion_over_bound", worst_ratio, 1.05, pairs + " at |dC|_F = 1e-6"),
          detail::at_most("first_order_convergence_violations", not_converging, 0,
                          pairs + "; raw ratio at 1e-7 <= ratio at 1e-6 in " + std::to_string(literal_ordering) +
                              " pairs (sign of the second-order term)")};
}

/// Spectra with strictly decreasing consecutive gaps, realized through
/// controlled_spectrum matrices: s_1 < s_i for every i >= 2.
inline SuiteCheck sensitivity_order_check(const SuiteOptions& o) {
  int violations = 0;
  for (int t = 0; t < o.spectra; ++t) {
    Rng rng(Rng::mix(o.seed + 5) + static_cast<std::uint64_t>(t));
    const Index n = 3 + static_cast<Index>(rng.index(8));  // 3..10
    std::vector<double> gaps;
    while (static_cast<Index>(gaps.size()) < n - 1) {
      const double g = 0.2 + 2.0 * rng.uniform();
      if (std::find(gaps.begin(), gaps.end(), g) == gaps.end()) gaps.push_back(g);
    }
    std::sort(gaps.rbegin(), gaps.rend());
    std::vector<double> lambda(static_cast<std::size_t>(n));
    lambda.back() = 0.5 + rng.uniform();
    for (Index j = n - 2; j >= 0; --j) {
      lambda[static_cast<std::size_t>(j)] = lambda[static_cast<std::size_t>(j + 1)] + gaps[static_cast<std::size_t>(j)];
    }
    SynthSpec spec;
    spec.kind = SynthKind::controlled_spectrum;
    spec.m = n + 2;
    spec.n = n;
    for (double l : lambda) spec.singular_values.push_back(std::sqrt(l));
    spec.seed = rng.bits();
    const SpectrumDiagnostics d = diagnose(generate(spec).matrix);
    const std::vector<double> s = sensitivity_coeffs(d.eigenvalues);
    for (std::size_t i = 1; i < s.size(); ++i) violations += s[0] < s[i] ? 0 : 1;
  }
  return detail::at_most("sensitivity_order_violations", violations, 0,
                         std::to_string(o.spectra) + " spectra with decreasing gaps");
}

inline SuiteReport lemma_suite(const SuiteOptions& o) {
  SuiteReport r;
  r.suite = "lemma";
  for (auto& c : correlation_bound_checks(o)) r.checks.push_back(std::move(c));
  r.checks.push_back(volume_bound_check(o));
  r.checks.push_back(deflation_identity_check(o));
  for (auto& c : perturbation_checks(o)) r.checks.push_back(std::move(c));
  r.checks.push_back(sensitivity_order_check(o));
  return r;
}

inline SynthSpec error_ratio_data(std::uint64_t seed) {
  SynthSpec spec;
  spec.kind = SynthKind::subspace_union;
  spec.m = 200;
  spec.n = 50;
  spec.subspaces = 5;
  spec.subspace_dim = 5;
  spec.noise_sigma = 0.05;
  spec.seed = seed;
  return spec;
}

/// Mean ratio of each method's projection error to that of random
/// selection, K = 1..error_max_k, on noisy unions of subspaces.
inline SuiteReport error_ratio_suite(const SuiteOptions& o) {
  const auto kmax = static_cast<std::size_t>(o.error_max_k);
  std::map<std::string, std::vector<double>> ratio_sum;
  for (const char* name : {"ipm", "kmedoids", "detgreedy"}) ratio_sum[name].assign(kmax, 0.0);

  for (int t = 0; t < o.error_trials; ++t) {
    const std::uint64_t seed = Rng::mix(o.seed + 6) + static_cast<std::uint64_t>(t);
    const DataMatrix a = generate(error_ratio_data(seed)).matrix;
    IpmOptions opts;
    opts.power.seed = seed;
    const SelectionResult ipm = ipm_select(a, o.error_max_k, opts);
    const SelectionResult greedy = det_greedy_select(a, o.error_max_k);
    for (std::size_t k = 1; k <= kmax; ++k) {
      double random_error = 0.0;
      for (int d = 0; d < o.random_draws; ++d) {
        const auto pick = random_select(a, static_cast<Index>(k), seed * 31 + static_cast<std::uint64_t>(d));
        random_error += projection_error(a, pick.indices);
      }
      random_error /= o.random_draws;
      auto prefix = [k](const SelectionResult& r) { return std::span<const Index>(r.indices.data(), k); };
      ratio_sum["ipm"][k - 1] += projection_error(a, prefix(ipm)) / random_error;
      ratio_sum["detgreedy"][k - 1] += projection_error(a, prefix(greedy)) / random_error;
      ratio_sum["kmedoids"][k - 1] +=
          projection_error(a, kmedoids_select(a, static_cast<Index>(k), seed).indices) / random_error;
    }
  }

  SuiteReport r;
  r.suite = "error-ratio";
  for (std::size_t k = 1; k <= kmax; ++k) {
    const double ipm = ratio_sum["ipm"][k - 1] / o.error_trials;
    const double pam = ratio_sum["kmedoids"][k - 1] / o.error_trials;
    const double greedy = ratio_sum["detgreedy"][k - 1] / o.error_trials;
    r.checks.push_back(detail::below("ipm_ratio_vs_random_K" + std::to_string(k), ipm, 1.0,
                                     std::to_string(o.error_trials) + " trials"));
    if (k >= 5) {
      r.checks.push_back(detail::at_most("ipm_ratio_le_kmedoids_K" + std::to_string(k), ipm, pam));
    }
    r.measurements.emplace_back("kmedoids_ratio_K" + std::to_string(k), pam);
    r.measurements.emplace_back("detgreedy_ratio_K" + std::to_string(k), greedy);
  }
  return r;
}

inline double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// IPM wall clock against M at fixed N and K (median of runtime_reps after
/// one warm-up), and IPM against PAM at pam_size.
inline SuiteReport runtime_suite(const SuiteOptions& o) {
  auto data = [&](Index m) {
    SynthSpec spec;
    spec.kind = SynthKind::subspace_union;
    spec.m = m;
    spec.n = o.runtime_n;
    spec.subspaces = 5;
    spec.subspace_dim = 5;
    spec.noise_sigma = 0.05;
    spec.seed = Rng::mix(o.seed + 7);
    return generate(spec).matrix;
  };
  auto time_ipm = [&](const DataMatrix& a) {
    IpmOptions opts;
    opts.power.seed = o.seed;
    ipm_select(a, o.runtime_k, opts);
    std::vector<double> times;
    for (int rep = 0; rep < o.runtime_reps; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      ipm_select(a, o.runtime_k, opts);
      times.push_back(detail::seconds_since(start));
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
  };

  SuiteReport r;
  r.suite = "runtime";
  std::vector<double> sizes;
  std::vector<double> times;
  double ipm_at_pam_size = -1.0;
  for (Index m : o.runtime_sizes) {
    const DataMatrix a = data(m);
    const double t = time_ipm(a);
    sizes.push_back(static_cast<double>(m));
    times.push_back(t);
    if (m == o.pam_size) ipm_at_pam_size = t;
    r.measurements.emplace_back("ipm_seconds_M" + std::to_string(m), t);
  }
  const double slope = log_log_slope(sizes, times);
  r.checks.push_back({"ipm_time_loglog_slope", slope >= 0.8 && slope <= 1.3, slope, "in", 0.8,
                      "band [0.8, 1.3]; N = " + std::to_string(o.runtime_n) + ", K = " + std::to_string(o.runtime_k)});

  if (o.pam_size > 0) {
    const DataMatrix a = data(o.pam_size);
    if (ipm_at_pam_size < 0.0) ipm_at_pam_size = time_ipm(a);
    const auto start = std::chrono::steady_clock::now();
    kmedoids_select(a, o.runtime_k, o.seed);
    const double pam = detail::seconds_since(start);
    r.checks.push_back(detail::below("ipm_seconds_vs_pam_M" + std::to_string(o.pam_size), ipm_at_pam_size, pam,
                                     "threshold is the PAM wall clock"));
  }
  return r;
}

/// Outliers selected per method when 5% of rows are isotropic outliers at
/// five times the typical row norm.
inline SuiteReport outlier_suite(const SuiteOptions& o) {
  std::map<std::string, double> picked;
  const Index k = 10;
  for (int t = 0; t < o.outlier_trials; ++t) {
    const std::uint64_t seed = Rng::mix(o.seed + 8) + static_cast<std::uint64_t>(t);
    SynthSpec spec = error_ratio_data(seed);
    spec.m = 190;
    spec.outlier_count = 10;
    spec.outlier_scale = 5.0;
    const SynthData d = generate(spec);
    auto count = [&](const SelectionResult& r) {
      double c = 0.0;
      for (Index i : r.indices) c += d.labels[static_cast<std::size_t>(i)] < 0 ? 1.0 : 0.0;
      return c;
    };
    IpmOptions opts;
    opts.power.seed = seed;
    picked["ipm"] += count(ipm_select(d.matrix, k, opts));
    picked["kmedoids"] += count(kmedoids_select(d.matrix, k, seed));
    picked["detgreedy"] += count(det_greedy_select(d.matrix, k));
    picked["random"] += count(random_select(d.matrix, k, seed));
  }
  SuiteReport r;
  r.suite = "outlier";
  for (auto& [name, total] : picked) {
    total /= o.outlier_trials;
    r.measurements.emplace_back(name + "_outliers_per_selection_of_10", total);
  }
  r.checks.push_back(detail::at_most("ipm_outliers_le_detgreedy", picked["ipm"], picked["detgreedy"],
                                     "mean outliers among 10 picks; threshold is the determinant-greedy count"));
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemma", "error-ratio", "runtime", "outlier"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& o = {}) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r;
  if (name == "lemma") {
    r = lemma_suite(o);
  } else if (name == "error-ratio") {
    r = error_ratio_suite(o);
  } else if (name == "runtime") {
    r = runtime_suite(o);
  } else if (name == "outlier") {
    r = outlier_suite(o);
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  r.elapsed_seconds = detail::seconds_since(start);
  r.threads = std::max(1u, std::thread::hardware_concurrency());
  r.build = detail::build_stamp();
  return r;
}

inline nlohmann::json report_to_json(const SuiteReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"measured", c.measured},
                      {"relation", c.relation},
                      {"threshold", c.threshold},
                      {"detail", c.detail}});
  }
  nlohmann::json measurements = nlohmann::json::object();
  for (const auto& [k, v] : r.measurements) measurements[k] = v;
  return {{"suite", r.suite},
          {"passed", r.passed()},
          {"checks", checks},
          {"measurements", measurements},
          {"elapsed_seconds", r.elapsed_seconds},
          {"environment", {{"threads", r.threads}, {"build", r.build}}}};
}

inline void print_report(const SuiteReport& r, std::ostream& out) {
  out << "suite " << r.suite << " (" << std::fixed << std::setprecision(2) << r.elapsed_seconds << " s, "
      << r.threads << " threads, " << r.build << ")\n";
  out << std::defaultfloat << std::setprecision(6);
  for (const auto& c : r.checks) {
    std::ostringstream line;
    line << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(38) << c.name << " "
         << c.measured << " " << c.relation << " " << c.threshold;
    if (!c.detail.empty()) line << "  [" << c.detail << "]";
    out << line.str() << '\n';
  }
  for (const auto& [k, v] : r.measurements) out << "     " << std::left << std::setw(38) << k << " " << v << '\n';
}

}  // namespace subsel
