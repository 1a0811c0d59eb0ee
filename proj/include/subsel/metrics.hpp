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

// Selection quality and spectral diagnostics.
//
//   projection_error      |A - P_T(A)|_F^2, P_T = projection onto span of rows T
//   best_rank_k_error     sum_{r > K} sigma_r^2
//   rom                   sigma_1 / |A|_F (rank-oneness)
//   sensitivity_coeffs    s_i = sqrt(sum_{j != i} 1 / (lambda_i - lambda_j)^2)
//
// The check_* functions evaluate the bounds these quantities satisfy on a
// concrete matrix, so that sweeps can count violations.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "subsel/baselines.hpp"
#include "subsel/linalg.hpp"

namespace subsel {

inline void validate_indices(std::span<const Index> indices, Index rows) {
  std::set<Index> seen;
  for (Index i : indices) {
    if (i < 0 || i >= rows) {
      throw std::invalid_argument("index " + std::to_string(i) + " out of range [0, " + std::to_string(rows) + ")");
    }
    if (!seen.insert(i).second) throw std::invalid_argument("duplicate index " + std::to_string(i));
  }
}

inline OrthonormalBasis row_basis(const DataMatrix& a, std::span<const Index> indices, double eps = 1e-8) {
  OrthonormalBasis q(a.cols());
  for (Index i : indices) q.extend(a.row(i).transpose(), eps);
  return q;
}

/// |A - P_T(A)|_F^2 with P_T the projection onto the span of the chosen rows.
inline double projection_error(const DataMatrix& a, std::span<const Index> indices) {
  validate_indices(indices, a.rows());
  if (indices.empty()) return a.frobenius_sq();
  return project_residual(a, row_basis(a, indices)).energy;
}

inline double best_rank_k_error(const DataMatrix& a, Index k) {
  if (k < 0) throw std::invalid_argument("best_rank_k_error: K must be non-negative");
  const Vector sigma = full_spectrum(a).values;
  double tail = 0.0;
  for (Index r = k; r < sigma.size(); ++r) tail += sigma[r] * sigma[r];
  return tail;
}

namespace detail {

// Leading right singular pair; exact SVD for small matrices, power
// iteration above the cap.
inline std::pair<double, Vector> leading_pair(const Matrix& a) {
  if (std::min(a.rows(), a.cols()) <= kDefaultSpectrumCap) {
    Spectrum s = full_spectrum(a);
    return {s.values[0], s.right.col(0)};
  }
  SingularTriplet t = power_iteration(a, {});
  return {t.sigma, t.right};
}

inline Matrix live_rows(const Matrix& a, bool normalize) {
  const Vector norms = a.rowwise().norm();
  Index live = 0;
  for (Index i = 0; i < a.rows(); ++i) live += norms[i] > 0.0 ? 1 : 0;
  Matrix out(live, a.cols());
  Index r = 0;
  for (Index i = 0; i < a.rows(); ++i) {
    if (norms[i] > 0.0) out.row(r++) = normalize ? Matrix(a.row(i) / norms[i]) : Matrix(a.row(i));
  }
  return out;
}

}  // namespace detail

/// sigma_1 / |A|_F.
inline double rom(const DataMatrix& a) {
  const double frob = std::sqrt(a.frobenius_sq());
  if (frob == 0.0) throw std::invalid_argument("rom: undefined for the zero matrix");
  return detail::leading_pair(a.values()).first / frob;
}

/// Sensitivity coefficient of every eigenvalue. Requires pairwise gaps
/// above 1e-10.
inline std::vector<double> sensitivity_coeffs(std::span<const double> eigenvalues) {
  const std::size_t n = eigenvalues.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(std::abs(eigenvalues[i] - eigenvalues[j]) > 1e-10)) {
        throw std::invalid_argument("sensitivity_coeffs: eigenvalues " + std::to_string(i) + " and " +
                                    std::to_string(j) + " are not distinct");
      }
    }
  }
  std::vector<double> s(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double gap = eigenvalues[i] - eigenvalues[j];
      acc += 1.0 / (gap * gap);
    }
    s[i] = std::sqrt(acc);
  }
  return s;
}

struct SpectrumDiagnostics {
  std::vector<double> eigenvalues;    // of A^T A, descending, length N
  double rom = 0.0;
  std::vector<double> sensitivities;  // +inf for repeated eigenvalues
};

inline SpectrumDiagnostics diagnose(const DataMatrix& a) {
  SpectrumDiagnostics d;
  const Vector sigma = full_spectrum(a).values;
  d.eigenvalues.assign(static_cast<std::size_t>(a.cols()), 0.0);
  for (Index r = 0; r < sigma.size(); ++r) d.eigenvalues[static_cast<std::size_t>(r)] = sigma[r] * sigma[r];
  double total = 0.0;
  for (double l : d.eigenvalues) total += l;
  if (total == 0.0) throw std::invalid_argument("diagnose: matrix is zero");
  d.rom = std::sqrt(d.eigenvalues[0] / total);
  const std::size_t n = d.eigenvalues.size();
  d.sensitivities.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n && std::isfinite(acc); ++j) {
      if (j == i) continue;
      const double gap = d.eigenvalues[i] - d.eigenvalues[j];
      acc = std::abs(gap) > 1e-10 ? acc + 1.0 / (gap * gap) : std::numeric_limits<double>::infinity();
    }
    d.sensitivities[i] = std::sqrt(acc);
  }
  return d;
}

/// max_m |v^T a_m| - sigma_1 / sqrt(M) on the rows as given.
inline double check_lemma1(const Matrix& a) {
  const auto [sigma, v] = detail::leading_pair(a);
  const double best = (a * v).cwiseAbs().maxCoeff();
  return best - sigma / std::sqrt(static_cast<double>(a.rows()));
}

inline double check_lemma1(const DataMatrix& a) { return check_lemma1(a.values()); }

/// Rows are put on the unit sphere (zero rows dropped), then returns
/// max_m |v^T a_m| - ROM.
inline double check_rom_bound(const Matrix& a) {
  const Matrix unit = detail::live_rows(a, true);
  if (unit.rows() == 0) throw std::invalid_argument("check_rom_bound: matrix is zero");
  const auto [sigma, v] = detail::leading_pair(unit);
  const double best = (unit * v).cwiseAbs().maxCoeff();
  return best - sigma / unit.norm();
}

inline double check_rom_bound(const DataMatrix& a) { return check_rom_bound(a.values()); }

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds(double slack = 1e-9) const { return lhs <= rhs + slack; }
};

/// Expected projection error under exact volume sampling versus
/// (K + 1) |A - A_K|_F^2, by enumerating every K-subset.
inline BoundCheck check_vs_bound(const DataMatrix& a, Index k, std::uint64_t cap = 200000) {
  const VolumeTable table = enumerate_volumes(a, k, cap);
  if (!(table.total > 0.0)) throw std::invalid_argument("check_vs_bound: every K-subset has zero volume");
  BoundCheck c;
  for (std::size_t t = 0; t < table.count(); ++t) {
    if (table.weights[t] == 0.0) continue;
    const std::vector<Index> subset = table.subset(t);
    c.lhs += table.weights[t] / table.total * projection_error(a, subset);
  }
  c.rhs = static_cast<double>(k + 1) * best_rank_k_error(a, k);
  return c;
}

struct PerturbationCheck {
  double lhs = 0.0;          // |v_i(C + dC) - v_i(C)|_2
  double bound = 0.0;        // s_i |dC|_F
  double first_order = 0.0;  // |(lambda_i I - C)^+ dC v_i|_2
  double delta_norm = 0.0;
};

/// Eigenvector motion under a small symmetric perturbation, against the
/// sensitivity bound. Index i counts eigenvalues in descending order.
/// Eigenpairs are computed in extended precision so that the finite
/// difference is accurate at |dC| ~ 1e-7.
inline PerturbationCheck check_eigvec_perturbation(const Matrix& c, const Matrix& delta, Index i) {
  using LMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using LVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const Index n = c.rows();
  if (c.cols() != n || delta.rows() != n || delta.cols() != n) {
    throw std::invalid_argument("check_eigvec_perturbation: C and delta must be square of equal size");
  }
  if (i < 0 || i >= n) throw std::invalid_argument("check_eigvec_perturbation: eigen index out of range");
  const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
  if ((c - c.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale ||
      (delta - delta.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1e-300, delta.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("check_eigvec_perturbation: C and delta must be symmetric");
  }

  auto descending = [](const LMatrix& m) {
    Eigen::SelfAdjointEigenSolver<LMatrix> es(m);
    LVector values = es.eigenvalues().reverse();
    LMatrix vectors = es.eigenvectors().rowwise().reverse();
    return std::pair{values, vectors};
  };
  const LMatrix cl = c.cast<long double>();
  const LMatrix dl = delta.cast<long double>();
  const auto [lambda, vecs] = descending(cl);

  long double min_gap = std::numeric_limits<long double>::infinity();
  for (Index j = 0; j + 1 < n; ++j) min_gap = std::min(min_gap, lambda[j] - lambda[j + 1]);
  if (n > 1 && !(min_gap > 1e-10L)) {
    throw std::invalid_argument("check_eigvec_perturbation: eigenvalues of C are not distinct");
  }
  const long double dnorm = dl.norm();
  if (n > 1 && dnorm > 1e-3L * min_gap) {
    throw std::invalid_argument("check_eigvec_perturbation: |delta|_F must be <= 1e-3 * min eigengap");
  }

  const auto [lambda2, vecs2] = descending(cl + dl);
  LVector v0 = vecs.col(i);
  LVector v1 = vecs2.col(i);
  if (v0.dot(v1) < 0.0L) v1 = -v1;

  long double s2 = 0.0L;
  long double first = 0.0L;
  for (Index j = 0; j < n; ++j) {
    if (j == i) continue;
    const long double gap = lambda[i] - lambda[j];
    s2 += 1.0L / (gap * gap);
    const long double coupling = vecs.col(j).dot(dl * v0) / gap;
    first += coupling * coupling;
  }

  PerturbationCheck p;
  p.lhs = static_cast<double>((v1 - v0).norm());
  p.delta_norm = static_cast<double>(dnorm);
  p.bound = static_cast<double>(std::sqrt(s2) * dnorm);
  p.first_order = static_cast<double>(std::sqrt(first));
  return p;
}

}  // namespace subsel
