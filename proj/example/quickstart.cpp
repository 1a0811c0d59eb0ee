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

// Pick 10 representative rows from 500 points on a union of five planes and
// compare the span error with a few baselines.

#include <iomanip>
#include <iostream>

#include "subsel/baselines.hpp"
#include "subsel/datagen.hpp"
#include "subsel/metrics.hpp"
#include "subsel/selection.hpp"

int main() {
  subsel::SynthSpec spec;
  spec.kind = subsel::SynthKind::subspace_union;
  spec.m = 500;
  spec.n = 40;
  spec.subspaces = 5;
  spec.subspace_dim = 2;
  spec.noise_sigma = 0.05;
  spec.seed = 7;
  const subsel::SynthData data = subsel::generate(spec);
  const subsel::DataMatrix& a = data.matrix;
  const subsel::Index k = 10;

  const auto ipm = subsel::ipm_select(a, k);
  std::cout << "ipm picked rows:";
  for (auto i : ipm.indices) std::cout << ' ' << i << " (plane " << data.labels[static_cast<std::size_t>(i)] << ')';
  std::cout << "\n\n";

  std::cout << std::left << std::setw(12) << "method" << "projection error\n";
  auto report = [&](const subsel::SelectionResult& r) {
    std::cout << std::setw(12) << r.method << subsel::projection_error(a, r.indices) << '\n';
  };
  report(ipm);
  report(subsel::random_select(a, k, 7));
  report(subsel::det_greedy_select(a, k));
  report(subsel::kmedoids_select(a, k));
  std::cout << std::setw(12) << "best rank-K" << subsel::best_rank_k_error(a, k) << '\n';
}
