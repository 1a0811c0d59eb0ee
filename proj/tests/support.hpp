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

// Shared fixtures and independent reference computations for the tests.
// The references deliberately avoid the library's own kernels: leading
// vectors come from a self-adjoint eigensolver on the Gram matrix, spans
// from a fresh least-squares solve.

#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <unistd.h>

#include <Eigen/Dense>

#include "subsel/linalg.hpp"
#include "subsel/random.hpp"

namespace subsel::testing {

inline Matrix gaussian(Index m, Index n, std::uint64_t seed) {
  Rng rng(seed);
  Matrix a(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) a(i, j) = rng.normal();
  }
  return a;
}

// Leading eigenvector of A^T A via a dense symmetric eigensolver.
inline Vector reference_leading_right(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.transpose() * a);
  return es.eigenvectors().col(a.cols() - 1);
}

// |A - P A|^2 with P the orthogonal projector onto span of the chosen rows,
// by least squares through a complete orthogonal decomposition.
inline double reference_projection_error(const Matrix& a, const std::vector<Index>& rows) {
  if (rows.empty()) return a.squaredNorm();
  Matrix b(static_cast<Index>(rows.size()), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) b.row(static_cast<Index>(i)) = a.row(rows[i]);
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(b.transpose());
  const Matrix coeff = cod.solve(a.transpose());
  return (a.transpose() - b.transpose() * coeff).squaredNorm();
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("subsel_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace subsel::testing
