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

// Dense kernels shared by the selection methods and the diagnostics:
// row normalization, the leading singular triplet by power iteration,
// rank-one deflation, Gram-Schmidt basis growth, residual projection and a
// full SVD for small matrices.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subsel/random.hpp"

namespace subsel {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Dense M x N matrix of finite reals; row m is sample m.
class DataMatrix {
 public:
  explicit DataMatrix(Matrix values) : values_(std::move(values)) {
    if (values_.rows() < 1 || values_.cols() < 1) {
      throw std::invalid_argument("data matrix must have at least one row and one column");
    }
    if (!values_.allFinite()) {
      throw std::invalid_argument("data matrix contains NaN or Inf");
    }
  }

  static DataMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const auto m = static_cast<Index>(rows.size());
    const auto n = m == 0 ? Index{0} : static_cast<Index>(rows.begin()->size());
    Matrix values(m, n);
    Index i = 0;
    for (const auto& row : rows) {
      if (static_cast<Index>(row.size()) != n) throw std::invalid_argument("ragged row list");
      Index j = 0;
      for (double x : row) values(i, j++) = x;
      ++i;
    }
    return DataMatrix(std::move(values));
  }

  Index rows() const { return values_.rows(); }
  Index cols() const { return values_.cols(); }
  const Matrix& values() const { return values_; }
  auto row(Index m) const { return values_.row(m); }
  double operator()(Index m, Index n) const { return values_(m, n); }
  double frobenius_sq() const { return values_.squaredNorm(); }

  friend bool operator==(const DataMatrix& a, const DataMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.values_ == b.values_;
  }

 private:
  Matrix values_;
};

struct SingularTriplet {
  double sigma = 0.0;
  Vector left;   // length M
  Vector right;  // length N
  bool converged = false;
  bool zero = false;  // input was numerically zero; vectors are placeholders
  int iterations = 0;
};

struct PowerIterationOptions {
  double tol = 1e-9;
  int max_iter = 1000;
  std::uint64_t seed = 0;
};

/// Orthonormal vectors of a fixed ambient dimension, stored as columns.
class OrthonormalBasis {
 public:
  explicit OrthonormalBasis(Index ambient_dim) : vectors_(ambient_dim, 0) {}

  Index ambient_dim() const { return vectors_.rows(); }
  Index size() const { return vectors_.cols(); }
  bool empty() const { return size() == 0; }
  const Matrix& vectors() const { return vectors_; }
  auto vector(Index i) const { return vectors_.col(i); }

  // Orthogonalizes w against the basis twice and appends it when the
  // remainder exceeds eps * |w|. Returns whether w was appended.
  bool extend(const Vector& w, double eps) {
    if (w.size() != ambient_dim()) throw std::invalid_argument("basis extension: dimension mismatch");
    const double wnorm = w.norm();
    if (wnorm == 0.0) return false;
    Vector r = w;
    for (int pass = 0; pass < 2; ++pass) {
      if (!empty()) r -= vectors_ * (vectors_.transpose() * r);
    }
    const double rnorm = r.norm();
    if (!(rnorm > eps * wnorm)) return false;
    vectors_.conservativeResize(Eigen::NoChange, size() + 1);
    vectors_.col(size() - 1) = r / rnorm;
    return true;
  }

 private:
  Matrix vectors_;
};

struct BasisExtension {
  OrthonormalBasis basis;
  bool accepted = false;
};

struct RowNormalization {
  DataMatrix normalized;
  Vector norms;
  std::vector<bool> live;
};

struct Residual {
  DataMatrix matrix;
  double energy = 0.0;
};

struct Spectrum {
  Vector values;  // descending, length min(M, N)
  Matrix right;   // N x min(M, N), column r pairs with values[r]
};

inline constexpr Index kDefaultSpectrumCap = 2000;

namespace detail {

// Scores within this relative distance count as tied; ties keep the
// lowest index.
inline constexpr double kTieTolerance = 1e-12;

inline bool clearly_greater(double a, double b) { return a > b + kTieTolerance * std::abs(b); }

// Flips v so that its first non-negligible entry is positive. Returns the
// sign applied.
inline double canonicalize_sign(Eigen::Ref<Vector> v) {
  const double scale = v.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 1.0;
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12 * scale) {
      if (v[i] < 0.0) {
        v = -v;
        return -1.0;
      }
      return 1.0;
    }
  }
  return 1.0;
}

inline SingularTriplet zero_triplet(Index m, Index n) {
  SingularTriplet t;
  t.left = Vector::Unit(m, 0);
  t.right = Vector::Unit(n, 0);
  t.zero = true;
  t.converged = true;
  return t;
}

// Rows per block in the power-iteration sweep; A v and A^T y share one pass
// over each block while it is cache resident.
inline constexpr Index kPowerBlockRows = 256;

inline SingularTriplet power_iteration(const Eigen::Ref<const Matrix>& a, const PowerIterationOptions& opts) {
  const Index m = a.rows();
  const Index n = a.cols();
  if (!(opts.tol > 0.0)) throw std::invalid_argument("power iteration: tol must be positive");
  if (opts.max_iter < 1) throw std::invalid_argument("power iteration: max_iter must be >= 1");
  if (a.squaredNorm() == 0.0) return zero_triplet(m, n);

  Rng rng(opts.seed);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v[i] = rng.normal();
  v.normalize();

  SingularTriplet t;
  Vector y(m);
  Vector w(n);
  for (int it = 1; it <= opts.max_iter; ++it) {
    w.setZero();
    for (Index start = 0; start < m; start += kPowerBlockRows) {
      const Index len = std::min(kPowerBlockRows, m - start);
      y.segment(start, len).noalias() = a.middleRows(start, len) * v;
      w.noalias() += a.middleRows(start, len).transpose() * y.segment(start, len);
    }
    const double wnorm = w.norm();
    if (wnorm == 0.0) return zero_triplet(m, n);
    w /= wnorm;
    if (w.dot(v) < 0.0) w = -w;
    const double change = (w - v).norm();
    v.swap(w);
    t.iterations = it;
    if (change <= opts.tol) {
      t.converged = true;
      break;
    }
  }

  y.noalias() = a * v;
  t.sigma = y.norm();
  if (t.sigma == 0.0) return zero_triplet(m, n);
  const double s = canonicalize_sign(v);
  t.right = std::move(v);
  t.left = (s / t.sigma) * y;
  return t;
}

// In-place A <- A (I - d d^T), applied twice so each row ends orthogonal to
// d to working precision relative to its own (possibly small) norm.
inline void deflate_in_place(Eigen::Ref<Matrix> a, const Vector& d) {
  for (int pass = 0; pass < 2; ++pass) {
    const Vector coeff = a * d;
    a.noalias() -= coeff * d.transpose();
  }
}

}  // namespace detail

inline RowNormalization normalize_rows(const DataMatrix& a, double eps = 1e-12) {
  if (!(eps > 0.0)) throw std::invalid_argument("normalize_rows: eps must be positive");
  Matrix out = a.values();
  Vector norms = a.values().rowwise().norm();
  std::vector<bool> live(static_cast<std::size_t>(a.rows()));
  for (Index m = 0; m < a.rows(); ++m) {
    if (norms[m] > eps) {
      out.row(m) /= norms[m];
      live[static_cast<std::size_t>(m)] = true;
    } else {
      out.row(m).setZero();
    }
  }
  return {DataMatrix(std::move(out)), std::move(norms), std::move(live)};
}

/// Leading singular triplet of A by power iteration on A^T A from a seeded
/// random start. Never throws on slow convergence: the last iterate is
/// returned with converged = false.
inline SingularTriplet leading_singular_triplet(const DataMatrix& a, double tol = 1e-9, int max_iter = 1000,
                                                std::uint64_t seed = 0) {
  return detail::power_iteration(a.values(), {tol, max_iter, seed});
}

/// A (I - d d^T). d must be a unit vector.
inline DataMatrix deflate_rows(const DataMatrix& a, const Vector& d) {
  if (d.size() != a.cols()) throw std::invalid_argument("deflate_rows: direction has wrong length");
  if (std::abs(d.norm() - 1.0) > 1e-8) throw std::invalid_argument("deflate_rows: direction is not a unit vector");
  Matrix out = a.values();
  detail::deflate_in_place(out, d);
  return DataMatrix(std::move(out));
}

inline BasisExtension extend_orthonormal_basis(const OrthonormalBasis& q, const Vector& w, double eps = 1e-8) {
  BasisExtension ext{q, false};
  ext.accepted = ext.basis.extend(w, eps);
  return ext;
}

/// R = A (I - Q Q^T) and its squared Frobenius norm.
inline Residual project_residual(const DataMatrix& a, const OrthonormalBasis& q) {
  if (q.ambient_dim() != a.cols()) throw std::invalid_argument("project_residual: basis dimension mismatch");
  if (q.size() > a.cols()) throw std::invalid_argument("project_residual: basis larger than ambient dimension");
  Matrix r = a.values();
  if (!q.empty()) r.noalias() -= (a.values() * q.vectors()) * q.vectors().transpose();
  const double energy = r.squaredNorm();
  return {DataMatrix(std::move(r)), energy};
}

/// Singular values (descending) and right singular vectors via Jacobi SVD.
/// Intended for small matrices; larger ones should use the power-iteration path.
inline Spectrum full_spectrum(const Eigen::Ref<const Matrix>& a, Index cap = kDefaultSpectrumCap) {
  if (std::min(a.rows(), a.cols()) > cap) {
    throw std::invalid_argument("full_spectrum: min(M, N) = " + std::to_string(std::min(a.rows(), a.cols())) +
                                " exceeds the small-matrix cap of " + std::to_string(cap) +
                                "; use leading_singular_triplet instead");
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinV);
  Spectrum s{svd.singularValues(), svd.matrixV()};
  for (Index r = 0; r < s.right.cols(); ++r) {
    Vector col = s.right.col(r);
    detail::canonicalize_sign(col);
    s.right.col(r) = col;
  }
  return s;
}

inline Spectrum full_spectrum(const DataMatrix& a, Index cap = kDefaultSpectrumCap) {
  return full_spectrum(a.values(), cap);
}

}  // namespace subsel
