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

// Method x size x K x trial benchmark grid. Every cell generates its own
// dataset from a seed derived from (size, trial), so all methods in a trial
// see the same matrix, and cells can run in any order or in parallel.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "subsel/datagen.hpp"
#include "subsel/io.hpp"
#include "subsel/methods.hpp"
#include "subsel/metrics.hpp"

namespace subsel {

struct BenchSize {
  Index m = 0;
  Index n = 0;
};

struct BenchConfig {
  std::vector<std::string> methods;
  std::vector<BenchSize> sizes;
  std::vector<Index> ks;
  int trials = 1;
  std::uint64_t seed = 0;
  SynthSpec generator;
  int random_draws = 10;  // random selections averaged for the ratio denominator
};

struct BenchRow {
  std::string method;
  Index m = 0;
  Index n = 0;
  Index k = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  double error = 0.0;
  double error_ratio_vs_random = 0.0;
  double elapsed_seconds = 0.0;
};

inline BenchConfig bench_config_from_json(const nlohmann::json& j) {
  BenchConfig c;
  try {
    c.methods = j.at("methods").get<std::vector<std::string>>();
    for (const auto& s : j.at("sizes")) c.sizes.push_back({s.at("M").get<Index>(), s.at("N").get<Index>()});
    c.ks = j.at("ks").get<std::vector<Index>>();
    c.trials = j.at("trials").get<int>();
    c.seed = j.value("seed", std::uint64_t{0});
    c.random_draws = j.value("random_draws", 10);
    if (j.contains("generator")) c.generator = synth_spec_from_json(j.at("generator"));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed bench config: ") + e.what());
  }
  for (const auto& m : c.methods) {
    if (!is_known_method(m) || m == "ipm-compound") throw FormatError("bench: unsupported method '" + m + "'");
  }
  if (c.methods.empty() || c.sizes.empty() || c.ks.empty()) throw FormatError("bench: empty methods, sizes or ks");
  if (c.trials < 1) throw FormatError("bench: trials must be positive");
  if (c.random_draws < 1) throw FormatError("bench: random_draws must be positive");
  return c;
}

/// Seed of the dataset shared by every method in one (size, trial) cell.
inline std::uint64_t bench_data_seed(const BenchConfig& c, std::size_t size_index, int trial) {
  return Rng::mix(c.seed ^ Rng::mix(size_index * 1000003ULL + static_cast<std::uint64_t>(trial)));
}

/// Mean projection error of `draws` random K-subsets.
inline double random_baseline_error(const DataMatrix& a, Index k, std::uint64_t seed, int draws) {
  double total = 0.0;
  for (int d = 0; d < draws; ++d) {
    total += projection_error(a, random_select(a, k, seed + 1 + static_cast<std::uint64_t>(d)).indices);
  }
  return total / draws;
}

inline std::vector<BenchRow> run_bench(const BenchConfig& c, unsigned threads = 1) {
  struct Cell {
    std::size_t method;
    std::size_t size;
    std::size_t k;
    int trial;
  };
  std::vector<Cell> cells;
  for (std::size_t mi = 0; mi < c.methods.size(); ++mi) {
    for (std::size_t si = 0; si < c.sizes.size(); ++si) {
      for (std::size_t ki = 0; ki < c.ks.size(); ++ki) {
        for (int t = 0; t < c.trials; ++t) cells.push_back({mi, si, ki, t});
      }
    }
  }

  std::vector<BenchRow> rows(cells.size());
  auto run_cell = [&](const Cell& cell) {
    SynthSpec spec = c.generator;
    spec.m = c.sizes[cell.size].m;
    spec.n = c.sizes[cell.size].n;
    spec.seed = bench_data_seed(c, cell.size, cell.trial);
    const DataMatrix a = generate(spec).matrix;
    const Index k = c.ks[cell.k];
    const std::string& method = c.methods[cell.method];
    MethodParams params;
    params.seed = spec.seed;

    run_method(method, a, k, params);  // warm-up, discarded
    const auto start = std::chrono::steady_clock::now();
    const SelectionResult r = run_method(method, a, k, params);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    BenchRow row;
    row.method = method;
    row.m = a.rows();
    row.n = a.cols();
    row.k = k;
    row.trial = cell.trial;
    row.seed = spec.seed;
    row.error = projection_error(a, r.indices);
    const double baseline = random_baseline_error(a, k, spec.seed, c.random_draws);
    row.error_ratio_vs_random = baseline > 0.0 ? row.error / baseline : 0.0;
    row.elapsed_seconds = elapsed;
    return row;
  };

  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) rows[i] = run_cell(cells[i]);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < cells.size(); i = next++) rows[i] = run_cell(cells[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

inline void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "method,M,N,K,trial,seed,error,error_ratio_vs_random,elapsed_seconds\n";
  for (const auto& r : rows) {
    out << r.method << ',' << r.m << ',' << r.n << ',' << r.k << ',' << r.trial << ',' << r.seed << ','
        << detail::format_double(r.error) << ',' << detail::format_double(r.error_ratio_vs_random) << ','
        << detail::format_double(r.elapsed_seconds) << '\n';
  }
}

}  // namespace subsel
