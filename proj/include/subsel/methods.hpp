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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "subsel/baselines.hpp"
#include "subsel/selection.hpp"

namespace subsel {

inline constexpr std::array<std::string_view, 9> kMethodNames = {
    "ipm", "random", "uniform", "kmedoids", "volume", "detgreedy", "qrcp", "clusterpick", "ipm-compound"};

struct MethodParams {
  std::uint64_t seed = 0;
  std::optional<double> residual_fraction;
  int max_swaps = 100;
  std::uint64_t enumeration_cap = 200000;
  InnerPick inner = InnerPick::medoid;
  std::optional<CompoundOptions> compound;
};

inline bool is_known_method(std::string_view name) {
  for (auto known : kMethodNames) {
    if (known == name) return true;
  }
  return false;
}

/// Runs a method by its command-line name. K may be absent only for ipm with
/// a residual fraction.
inline SelectionResult run_method(std::string_view name, const DataMatrix& a, std::optional<Index> k,
                                  const MethodParams& p = {}) {
  if (name == "ipm") {
    IpmOptions opts;
    opts.power.seed = p.seed;
    return ipm_select(a, StoppingRule{k, p.residual_fraction}, opts);
  }
  if (!k) throw std::invalid_argument("method '" + std::string(name) + "' needs K");
  if (name == "ipm-compound") {
    if (!p.compound) throw std::invalid_argument("ipm-compound needs per-row scores");
    IpmOptions opts;
    opts.power.seed = p.seed;
    return ipm_select_compound(a, *k, *p.compound, opts);
  }
  BaselineSpec spec;
  spec.method = parse_baseline_method(name);
  spec.seed = p.seed;
  spec.max_swaps = p.max_swaps;
  spec.enumeration_cap = p.enumeration_cap;
  spec.inner = p.inner;
  return run_baseline(a, *k, spec);
}

}  // namespace subsel
