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

// Iterative projection and matching (IPM).
//
// Each step finds the leading right singular vector v of the current
// residual matrix, picks the live row whose normalized residual has the
// largest |v^T r|, and removes the direction of that residual row from every
// row. Deflating by the residual (not the original) row makes the composed
// projectors equal the projector onto the orthogonal complement of the span
// of the selected original rows, so residual_energies[k] is exactly the
// projection error of the first k+1 picks.

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "subsel/linalg.hpp"

namespace subsel {

using ParamValue = std::variant<std::int64_t, double, std::string>;

struct SelectionResult {
  std::string method;
  std::vector<Index> indices;  // selection order
  std::vector<double> sigmas;  // leading singular value of each residual
  std::vector<double> residual_energies;
  double elapsed_seconds = 0.0;
  std::map<std::string, ParamValue> parameters;
  std::vector<std::string> warnings;

  bool operator==(const SelectionResult&) const = default;
};

/// Stop at k_max selections, or once the residual energy drops to
/// residual_fraction * |A|_F^2, whichever comes first.
struct StoppingRule {
  std::optional<Index> k_max;
  std::optional<double> residual_fraction;

  static StoppingRule count(Index k) { return {k, std::nullopt}; }
  static StoppingRule energy(double fraction) { return {std::nullopt, fraction}; }

  void validate() const {
    if (!k_max && !residual_fraction) throw std::invalid_argument("stopping rule needs k_max or residual_fraction");
    if (k_max && *k_max < 0) throw std::invalid_argument("stopping rule: k_max must be non-negative");
    if (residual_fraction && !(*residual_fraction > 0.0 && *residual_fraction <= 1.0)) {
      throw std::invalid_argument("stopping rule: residual_fraction must lie in (0, 1]");
    }
  }
};

// Blend of the matching score and an external per-row score q:
// alpha * |v^T r| + (1 - alpha) * q, with alpha = alpha0 * decay^k at step k.
// Scores are used as given; putting them on a comparable range is up to the
// caller.
struct CompoundOptions {
  double alpha0 = 1.0;
  double decay = 0.95;
  std::vector<double> scores;

  void validate(Index rows) const {
    if (!(alpha0 >= 0.0 && alpha0 <= 1.0)) throw std::invalid_argument("compound: alpha0 must lie in [0, 1]");
    if (!(decay > 0.0 && decay <= 1.0)) throw std::invalid_argument("compound: decay must lie in (0, 1]");
    if (static_cast<Index>(scores.size()) != rows) {
      throw std::invalid_argument("compound: expected " + std::to_string(rows) + " scores, got " +
                                  std::to_string(scores.size()));
    }
    for (double q : scores) {
      if (!std::isfinite(q) || q < 0.0) throw std::invalid_argument("compound: scores must be finite and >= 0");
    }
  }
};

/// What an observer sees at each step, after matching and before deflation.
struct IpmStep {
  Index k;
  const Matrix& residual;
  const Vector& direction;
  const std::vector<bool>& live;
  Index selected;
  double sigma;
};

struct IpmOptions {
  PowerIterationOptions power;
  // A row is dead once its residual norm is <= span_eps * original norm.
  double span_eps = 1e-8;
  std::function<void(const IpmStep&)> observer;
};

namespace detail {

inline SelectionResult ipm_run(const DataMatrix& a, const StoppingRule& stop, const IpmOptions& opts,
                               const CompoundOptions* compound) {
  stop.validate();
  const auto start = std::chrono::steady_clock::now();
  const Index m = a.rows();

  SelectionResult result;
  result.method = compound ? "ipm-compound" : "ipm";
  result.parameters["seed"] = static_cast<std::int64_t>(opts.power.seed);
  result.parameters["tol"] = opts.power.tol;
  result.parameters["max_iter"] = static_cast<std::int64_t>(opts.power.max_iter);
  if (stop.k_max) result.parameters["k"] = static_cast<std::int64_t>(*stop.k_max);
  if (stop.residual_fraction) result.parameters["residual_fraction"] = *stop.residual_fraction;
  if (compound) {
    result.parameters["alpha0"] = compound->alpha0;
    result.parameters["decay"] = compound->decay;
  }

  Index budget = stop.k_max.value_or(m);
  if (budget > m) {
    result.warnings.push_back("requested " + std::to_string(budget) + " rows but matrix has " + std::to_string(m) +
                              "; selection truncated");
    budget = m;
  }

  Matrix residual = a.values();
  const Vector original_norms = residual.rowwise().norm();
  const double total_energy = residual.squaredNorm();
  std::vector<bool> live(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) live[static_cast<std::size_t>(i)] = original_norms[i] > 0.0;

  double energy = total_energy;
  double alpha = compound ? compound->alpha0 : 1.0;
  Vector norms = original_norms;

  for (Index k = 0; k < budget; ++k) {
    if (stop.residual_fraction && energy <= *stop.residual_fraction * total_energy) break;
    bool any_live = false;
    for (bool l : live) any_live = any_live || l;
    if (!any_live) break;

    PowerIterationOptions popts = opts.power;
    popts.seed = opts.power.seed + static_cast<std::uint64_t>(k);
    const SingularTriplet t = power_iteration(residual, popts);
    if (t.zero) break;
    if (!t.converged) {
      result.warnings.push_back("step " + std::to_string(k) + ": power iteration did not converge in " +
                                std::to_string(popts.max_iter) + " iterations");
    }

    const Vector proj = residual * t.right;
    Index best = -1;
    double best_score = -1.0;
    for (Index i = 0; i < m; ++i) {
      if (!live[static_cast<std::size_t>(i)]) continue;
      double score = std::abs(proj[i]) / norms[i];
      if (compound) score = alpha * score + (1.0 - alpha) * compound->scores[static_cast<std::size_t>(i)];
      if (best < 0 || clearly_greater(score, best_score)) {
        best_score = score;
        best = i;
      }
    }

    if (opts.observer) opts.observer(IpmStep{k, residual, t.right, live, best, t.sigma});

    const Vector direction = residual.row(best).transpose() / norms[best];
    deflate_in_place(residual, direction);
    norms = residual.rowwise().norm();
    live[static_cast<std::size_t>(best)] = false;
    for (Index i = 0; i < m; ++i) {
      if (norms[i] <= opts.span_eps * original_norms[i]) live[static_cast<std::size_t>(i)] = false;
    }

    energy = residual.squaredNorm();
    result.indices.push_back(best);
    result.sigmas.push_back(t.sigma);
    result.residual_energies.push_back(energy);
    if (compound) alpha *= compound->decay;
  }

  if (stop.k_max && static_cast<Index>(result.indices.size()) < budget &&
      !(stop.residual_fraction && energy <= *stop.residual_fraction * total_energy)) {
    result.warnings.push_back("residual exhausted after " + std::to_string(result.indices.size()) + " selections");
  }
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace detail

/// Greedy IPM selection of rows of A.
inline SelectionResult ipm_select(const DataMatrix& a, const StoppingRule& stop, const IpmOptions& opts = {}) {
  return detail::ipm_run(a, stop, opts, nullptr);
}

inline SelectionResult ipm_select(const DataMatrix& a, Index k, const IpmOptions& opts = {}) {
  return ipm_select(a, StoppingRule::count(k), opts);
}

/// IPM with the matching step replaced by the alpha-blended score.
inline SelectionResult ipm_select_compound(const DataMatrix& a, Index k, const CompoundOptions& copts,
                                           const IpmOptions& opts = {}) {
  copts.validate(a.rows());
  return detail::ipm_run(a, StoppingRule::count(k), opts, &copts);
}

}  // namespace subsel
