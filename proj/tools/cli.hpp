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

// The `subsel` command line: select, eval, diagnose, synth, bench, suite.
// run() takes the argument list and the two streams so tests can drive it
// in-process. Exit codes: 0 success, 1 data error, 2 usage error.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "subsel/bench.hpp"
#include "subsel/datagen.hpp"
#include "subsel/io.hpp"
#include "subsel/methods.hpp"
#include "subsel/metrics.hpp"
#include "subsel/suites.hpp"

namespace subsel::cli {

inline constexpr int kOk = 0;
inline constexpr int kDataError = 1;
inline constexpr int kUsageError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SelectArgs {
  std::string method = "ipm";
  std::optional<Index> k;
  std::optional<double> residual_fraction;
  std::uint64_t seed = 0;
  std::string scores;
  double alpha0 = 1.0;
  double decay = 0.95;
  std::string input;
  std::string output;
  bool has_header = false;
  int max_swaps = 100;
  std::string inner = "medoid";
  std::uint64_t enumeration_cap = 200000;
};

struct EvalArgs {
  std::string input;
  std::string result;
  int trials = 10;
  std::uint64_t seed = 0;
  bool has_header = false;
};

struct DiagnoseArgs {
  std::string input;
  bool has_header = false;
};

struct SynthArgs {
  std::string config;
  std::string output;
  std::string kind = "subspace_union";
  Index m = 100;
  Index n = 10;
  Index subspaces = 2;
  Index subspace_dim = 2;
  Index clusters = 3;
  double cluster_spread = 1.0;
  double center_scale = 10.0;
  std::vector<double> singular_values;
  double noise_sigma = 0.0;
  Index outlier_count = 0;
  double outlier_scale = 5.0;
  std::uint64_t seed = 0;
};

struct BenchArgs {
  std::string config;
  std::string output;
  unsigned threads = 1;
};

struct SuiteArgs {
  std::string name;
  bool json = false;
  std::uint64_t seed = 0;
};

namespace detail {

inline nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("'" + path + "': " + e.what());
  }
}

// Writes to the file when a path is given, to `fallback` otherwise.
template <typename Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write '" + path + "'");
  write(out);
}

inline std::string join(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += subsel::detail::format_double(xs[i]);
  }
  return s;
}

}  // namespace detail

inline int run_select(const SelectArgs& s, std::ostream& out) {
  if (!is_known_method(s.method)) throw UsageError("unknown method '" + s.method + "'");
  if (!s.k && !s.residual_fraction) throw UsageError("select needs --k or --residual-frac");
  if (s.method != "ipm" && !s.k) throw UsageError("method '" + s.method + "' needs --k");
  if (s.method != "ipm" && s.residual_fraction) throw UsageError("--residual-frac applies to ipm only");
  if (s.method == "ipm-compound" && s.scores.empty()) throw UsageError("ipm-compound needs --scores");
  if (s.method != "ipm-compound" && !s.scores.empty()) throw UsageError("--scores applies to ipm-compound only");

  MethodParams p;
  p.seed = s.seed;
  p.residual_fraction = s.residual_fraction;
  p.max_swaps = s.max_swaps;
  p.enumeration_cap = s.enumeration_cap;
  try {
    p.inner = parse_inner_pick(s.inner);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const DataMatrix a = read_matrix(s.input, s.has_header);
  if (s.method == "ipm-compound") {
    CompoundOptions c;
    c.alpha0 = s.alpha0;
    c.decay = s.decay;
    c.scores = read_scores(s.scores);
    p.compound = std::move(c);
  }
  const SelectionResult r = run_method(s.method, a, s.k, p);
  detail::emit(s.output, out, [&](std::ostream& o) { write_result(r, o); });
  return kOk;
}

inline int run_eval(const EvalArgs& e, std::ostream& out) {
  const DataMatrix a = read_matrix(e.input, e.has_header);
  const SelectionResult r = read_result(e.result);
  const double error = projection_error(a, r.indices);
  const auto k = static_cast<Index>(r.indices.size());
  const double baseline = random_baseline_error(a, k, e.seed, e.trials);
  const double ratio = baseline > 0.0 ? error / baseline : 0.0;
  using subsel::detail::format_double;
  out << "K " << k << '\n';
  out << "projection_error " << format_double(error) << '\n';
  out << "random_baseline_error " << format_double(baseline) << '\n';
  out << "error_ratio_vs_random " << format_double(ratio) << '\n';
  out << "best_rank_k_error " << format_double(best_rank_k_error(a, k)) << '\n';
  return kOk;
}

inline int run_diagnose(const DiagnoseArgs& d, std::ostream& out) {
  const DataMatrix a = read_matrix(d.input, d.has_header);
  const SpectrumDiagnostics s = diagnose(a);
  using subsel::detail::format_double;
  out << "rom " << format_double(s.rom) << '\n';
  out << "eigenvalues " << detail::join(s.eigenvalues) << '\n';
  std::string sens;
  for (std::size_t i = 0; i < s.sensitivities.size(); ++i) {
    if (i) sens += ',';
    sens += std::isinf(s.sensitivities[i]) ? "inf" : format_double(s.sensitivities[i]);
  }
  out << "sensitivities " << sens << '\n';
  out << "correlation_margin " << format_double(check_lemma1(a)) << '\n';
  return kOk;
}

inline SynthSpec synth_spec(const SynthArgs& s, const CLI::App& cmd) {
  SynthSpec spec;
  if (!s.config.empty()) spec = synth_spec_from_json(detail::read_json(s.config));
  auto given = [&](const char* flag) { return cmd.count(flag) > 0; };
  if (given("--kind")) {
    try {
      spec.kind = parse_synth_kind(s.kind);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (given("--M")) spec.m = s.m;
  if (given("--N")) spec.n = s.n;
  if (given("--subspaces")) spec.subspaces = s.subspaces;
  if (given("--subspace-dim")) spec.subspace_dim = s.subspace_dim;
  if (given("--clusters")) spec.clusters = s.clusters;
  if (given("--cluster-spread")) spec.cluster_spread = s.cluster_spread;
  if (given("--center-scale")) spec.center_scale = s.center_scale;
  if (given("--singular-values")) spec.singular_values = s.singular_values;
  if (given("--noise")) spec.noise_sigma = s.noise_sigma;
  if (given("--outliers")) spec.outlier_count = s.outlier_count;
  if (given("--outlier-scale")) spec.outlier_scale = s.outlier_scale;
  if (given("--seed")) spec.seed = s.seed;
  return spec;
}

inline int run_synth(const SynthArgs& s, const CLI::App& cmd) {
  SynthSpec spec = synth_spec(s, cmd);
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SynthData d = generate(spec);
  write_matrix(d.matrix, s.output);
  write_labels(d.labels, s.output + ".labels.csv");
  return kOk;
}

inline int run_bench_cmd(const BenchArgs& b, std::ostream& out) {
  const BenchConfig c = bench_config_from_json(detail::read_json(b.config));
  const auto rows = run_bench(c, b.threads);
  detail::emit(b.output, out, [&](std::ostream& o) { write_bench_csv(rows, o); });
  return kOk;
}

inline int run_suite_cmd(const SuiteArgs& s, std::ostream& out) {
  if (std::find(suite_names().begin(), suite_names().end(), s.name) == suite_names().end()) {
    throw UsageError("unknown suite '" + s.name + "'");
  }
  SuiteOptions o;
  o.seed = s.seed;
  const SuiteReport r = run_suite(s.name, o);
  if (s.json) {
    out << report_to_json(r).dump(2) << '\n';
  } else {
    print_report(r, out);
  }
  return r.passed() ? kOk : kDataError;
}

/// Parses `args` (without the program name) and runs the subcommand.
inline int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Row subset selection by iterative projection and matching, with baselines and diagnostics", "subsel"};
  app.require_subcommand(1);

  SelectArgs sel;
  auto* select = app.add_subcommand("select", "select K rows and write the result as JSON");
  select->add_option("--method", sel.method, "ipm|random|uniform|kmedoids|volume|detgreedy|qrcp|clusterpick|ipm-compound")
      ->capture_default_str();
  select->add_option("--k", sel.k, "number of rows to select")->check(CLI::NonNegativeNumber);
  select->add_option("--residual-frac", sel.residual_fraction, "ipm: stop once residual energy <= f * |A|^2");
  select->add_option("--seed", sel.seed)->capture_default_str();
  select->add_option("--scores", sel.scores, "per-row scores for ipm-compound (CSV row or column)");
  select->add_option("--alpha0", sel.alpha0)->capture_default_str();
  select->add_option("--decay", sel.decay)->capture_default_str();
  select->add_option("--input", sel.input, "matrix file, .csv or .bin")->required();
  select->add_option("--output", sel.output, "result JSON (stdout if absent)");
  select->add_flag("--has-header", sel.has_header, "skip the first CSV line");
  select->add_option("--max-swaps", sel.max_swaps, "kmedoids swap limit")->capture_default_str();
  select->add_option("--inner", sel.inner, "clusterpick inner pick: random|medoid|ipm")->capture_default_str();
  select->add_option("--enum-cap", sel.enumeration_cap, "volume: largest subset count to enumerate")
      ->capture_default_str();

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "projection error of a selection, relative to random selection");
  eval->add_option("--input", ev.input)->required();
  eval->add_option("--result", ev.result, "result JSON from select")->required();
  eval->add_option("--trials", ev.trials, "random selections averaged for the baseline")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval->add_option("--seed", ev.seed)->capture_default_str();
  eval->add_flag("--has-header", ev.has_header);

  DiagnoseArgs dg;
  auto* diag = app.add_subcommand("diagnose", "ROM, eigenvalues, sensitivities and correlation margin");
  diag->add_option("--input", dg.input)->required();
  diag->add_flag("--has-header", dg.has_header);

  SynthArgs sy;
  auto* synth = app.add_subcommand("synth", "write a synthetic matrix and a <output>.labels.csv sidecar");
  synth->add_option("--config", sy.config, "JSON spec; flags override its fields");
  synth->add_option("--output", sy.output, "matrix file, .csv or .bin")->required();
  synth->add_option("--kind", sy.kind, "subspace_union|gaussian_clusters|controlled_spectrum");
  synth->add_option("--M", sy.m, "inlier rows");
  synth->add_option("--N", sy.n, "columns");
  synth->add_option("--subspaces", sy.subspaces);
  synth->add_option("--subspace-dim", sy.subspace_dim);
  synth->add_option("--clusters", sy.clusters);
  synth->add_option("--cluster-spread", sy.cluster_spread);
  synth->add_option("--center-scale", sy.center_scale);
  synth->add_option("--singular-values", sy.singular_values)->delimiter(',');
  synth->add_option("--noise", sy.noise_sigma);
  synth->add_option("--outliers", sy.outlier_count, "outlier rows appended after the inliers");
  synth->add_option("--outlier-scale", sy.outlier_scale);
  synth->add_option("--seed", sy.seed);

  BenchArgs be;
  auto* bench = app.add_subcommand("bench", "run a method x size x K x trial grid, CSV out");
  bench->add_option("--config", be.config, "JSON grid definition")->required();
  bench->add_option("--output", be.output, "CSV path (stdout if absent)");
  bench->add_option("--threads", be.threads)->check(CLI::PositiveNumber)->capture_default_str();

  SuiteArgs su;
  auto* suite = app.add_subcommand("suite", "run a checked-in benchmark or property suite");
  suite->add_option("--name", su.name, "lemma|error-ratio|runtime|outlier")->required();
  suite->add_flag("--json", su.json, "JSON report instead of a table");
  suite->add_option("--seed", su.seed)->capture_default_str();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    if (*select) return run_select(sel, out);
    if (*eval) return run_eval(ev, out);
    if (*diag) return run_diagnose(dg, out);
    if (*synth) return run_synth(sy, *synth);
    if (*bench) return run_bench_cmd(be, out);
    if (*suite) return run_suite_cmd(su, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsageError;
}

}  // namespace subsel::cli
