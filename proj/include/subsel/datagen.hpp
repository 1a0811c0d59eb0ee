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

// Seeded synthetic data: unions of linear subspaces, isotropic Gaussian
// clusters and matrices with a prescribed spectrum, optionally with
// outlier rows appended (label -1).

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "subsel/linalg.hpp"
#include "subsel/random.hpp"

namespace subsel {

enum class SynthKind { subspace_union, gaussian_clusters, controlled_spectrum };

inline SynthKind parse_synth_kind(std::string_view name) {
  if (name == "subspace_union") return SynthKind::subspace_union;
  if (name == "gaussian_clusters") return SynthKind::gaussian_clusters;
  if (name == "controlled_spectrum") return SynthKind::controlled_spectrum;
  throw std::invalid_argument("unknown synthetic data kind '" + std::string(name) + "'");
}

inline std::string to_string(SynthKind kind) {
  switch (kind) {
    case SynthKind::subspace_union:
      return "subspace_union";
    case SynthKind::gaussian_clusters:
      return "gaussian_clusters";
    case SynthKind::controlled_spectrum:
      return "controlled_spectrum";
  }
  return "unknown";
}

struct SynthSpec {
  SynthKind kind = SynthKind::subspace_union;
  Index m = 100;  // inlier rows; outliers are appended after these
  Index n = 10;

  // subspace_union
  Index subspaces = 2;
  Index subspace_dim = 2;

  // gaussian_clusters
  Index clusters = 3;
  double cluster_spread = 1.0;
  double center_scale = 10.0;

  // controlled_spectrum
  std::vector<double> singular_values;

  double noise_sigma = 0.0;
  Index outlier_count = 0;
  // Outlier rows have expected norm outlier_scale times the RMS inlier row norm.
  double outlier_scale = 5.0;
  std::uint64_t seed = 0;

  void validate() const {
    auto fail = [](const std::string& why) { throw std::invalid_argument("synth spec: " + why); };
    if (m < 1 || n < 1) fail("M and N must be positive");
    if (!(noise_sigma >= 0.0)) fail("noise_sigma must be >= 0");
    if (outlier_count < 0) fail("outlier_count must be >= 0");
    if (!(outlier_scale >= 0.0)) fail("outlier_scale must be >= 0");
    switch (kind) {
      case SynthKind::subspace_union:
        if (subspaces < 1) fail("subspace count must be positive");
        if (subspaces > m) fail("more subspaces than rows");
        if (subspace_dim < 1 || subspace_dim > n) fail("subspace dimension must lie in [1, N]");
        break;
      case SynthKind::gaussian_clusters:
        if (clusters < 1 || clusters > m) fail("cluster count must lie in [1, M]");
        if (!(cluster_spread >= 0.0)) fail("cluster spread must be >= 0");
        break;
      case SynthKind::controlled_spectrum:
        if (singular_values.empty()) fail("controlled_spectrum needs singular values");
        if (static_cast<Index>(singular_values.size()) > std::min(m, n)) fail("more singular values than min(M, N)");
        for (double s : singular_values) {
          if (!(s >= 0.0) || !std::isfinite(s)) fail("singular values must be finite and >= 0");
        }
        break;
    }
  }
};

struct SynthData {
  DataMatrix matrix;
  std::vector<int> labels;  // subspace / cluster id, -1 for outliers
};

/// n x d matrix with orthonormal columns, Householder QR of a Gaussian draw.
inline Matrix random_orthonormal(Index n, Index d, Rng& rng) {
  Matrix g(n, d);
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i < n; ++i) g(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  return qr.householderQ() * Matrix::Identity(n, d);
}

inline SynthData generate(const SynthSpec& spec) {
  spec.validate();
  Rng root(spec.seed);
  Rng structure = root.split();
  Rng noise = root.split();
  Rng outliers = root.split();

  Matrix a(spec.m, spec.n);
  std::vector<int> labels(static_cast<std::size_t>(spec.m), 0);

  switch (spec.kind) {
    case SynthKind::subspace_union: {
      std::vector<Matrix> bases;
      for (Index l = 0; l < spec.subspaces; ++l) bases.push_back(random_orthonormal(spec.n, spec.subspace_dim, structure));
      const Index per = spec.m / spec.subspaces;
      const Index extra = spec.m % spec.subspaces;
      Index row = 0;
      Vector coeff(spec.subspace_dim);
      for (Index l = 0; l < spec.subspaces; ++l) {
        const Index count = per + (l < extra ? 1 : 0);
        for (Index c = 0; c < count; ++c, ++row) {
          for (Index j = 0; j < spec.subspace_dim; ++j) coeff[j] = structure.normal();
          a.row(row) = (bases[static_cast<std::size_t>(l)] * coeff).transpose();
          labels[static_cast<std::size_t>(row)] = static_cast<int>(l);
        }
      }
      break;
    }
    case SynthKind::gaussian_clusters: {
      Matrix centers(spec.clusters, spec.n);
      for (Index c = 0; c < spec.clusters; ++c) {
        for (Index j = 0; j < spec.n; ++j) centers(c, j) = spec.center_scale * structure.normal();
      }
      const Index per = spec.m / spec.clusters;
      const Index extra = spec.m % spec.clusters;
      Index row = 0;
      for (Index c = 0; c < spec.clusters; ++c) {
        const Index count = per + (c < extra ? 1 : 0);
        for (Index p = 0; p < count; ++p, ++row) {
          for (Index j = 0; j < spec.n; ++j) a(row, j) = centers(c, j) + spec.cluster_spread * structure.normal();
          labels[static_cast<std::size_t>(row)] = static_cast<int>(c);
        }
      }
      break;
    }
    case SynthKind::controlled_spectrum: {
      const auto r = static_cast<Index>(spec.singular_values.size());
      const Matrix u = random_orthonormal(spec.m, r, structure);
      const Matrix v = random_orthonormal(spec.n, r, structure);
      const Vector sigma = Eigen::Map<const Vector>(spec.singular_values.data(), r);
      a = u * sigma.asDiagonal() * v.transpose();
      break;
    }
  }

  if (spec.noise_sigma > 0.0) {
    for (Index i = 0; i < spec.m; ++i) {
      for (Index j = 0; j < spec.n; ++j) a(i, j) += spec.noise_sigma * noise.normal();
    }
  }

  if (spec.outlier_count > 0) {
    const double rms = std::sqrt(a.squaredNorm() / static_cast<double>(spec.m));
    const double scale = spec.outlier_scale * rms / std::sqrt(static_cast<double>(spec.n));
    a.conservativeResize(spec.m + spec.outlier_count, Eigen::NoChange);
    for (Index i = spec.m; i < a.rows(); ++i) {
      for (Index j = 0; j < spec.n; ++j) a(i, j) = scale * outliers.normal();
      labels.push_back(-1);
    }
  }
  return {DataMatrix(std::move(a)), std::move(labels)};
}

}  // namespace subsel
