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

// Comparison selectors: random, uniform, PAM k-medoids, volume sampling,
// determinant greedy, QR with column pivoting, and cluster-then-pick.
// All of them are deterministic given their seed and break ties toward the
// lowest row index.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "subsel/linalg.hpp"
#include "subsel/random.hpp"
#include "subsel/selection.hpp"

namespace subsel {

enum class BaselineMethod { random, uniform, kmedoids, volume_exact, det_greedy, qrcp, cluster_pick };
enum class InnerPick { random, medoid, ipm };

struct BaselineSpec {
  BaselineMethod method = BaselineMethod::random;
  std::uint64_t seed = 0;
  int max_swaps = 100;                        // kmedoids
  std::uint64_t enumeration_cap = 200000;     // volume_exact
  InnerPick inner = InnerPick::medoid;        // cluster_pick
  int kmeans_max_iter = 100;                  // cluster_pick
};

inline BaselineMethod parse_baseline_method(std::string_view name) {
  if (name == "random") return BaselineMethod::random;
  if (name == "uniform") return BaselineMethod::uniform;
  if (name == "kmedoids") return BaselineMethod::kmedoids;
  if (name == "volume" || name == "volume_exact") return BaselineMethod::volume_exact;
  if (name == "detgreedy" || name == "det_greedy") return BaselineMethod::det_greedy;
  if (name == "qrcp") return BaselineMethod::qrcp;
  if (name == "clusterpick" || name == "cluster_pick") return BaselineMethod::cluster_pick;
  throw std::invalid_argument("unknown baseline method '" + std::string(name) + "'");
}

inline InnerPick parse_inner_pick(std::string_view name) {
  if (name == "random") return InnerPick::random;
  if (name == "medoid") return InnerPick::medoid;
  if (name == "ipm") return InnerPick::ipm;
  throw std::invalid_argument("unknown inner pick method '" + std::string(name) + "'");
}

namespace detail {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline void require_k(Index k, Index m, const char* who) {
  if (k < 0) throw std::invalid_argument(std::string(who) + ": K must be non-negative");
  if (k > m) {
    throw std::invalid_argument(std::string(who) + ": K = " + std::to_string(k) + " exceeds the number of rows " +
                                std::to_string(m));
  }
}

// Row-major copy so that row differences walk contiguous memory.
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Matrix pairwise_distances(const Matrix& a) {
  const RowMatrix rows = a;
  const Index m = rows.rows();
  Matrix d(m, m);
  for (Index i = 0; i < m; ++i) {
    d(i, i) = 0.0;
    for (Index j = i + 1; j < m; ++j) {
      const double dist = (rows.row(i) - rows.row(j)).norm();
      d(i, j) = dist;
      d(j, i) = dist;
    }
  }
  return d;
}

// Rank-exhaustion threshold shared by det_greedy and qrcp.
inline constexpr double kPivotEps = 1e-8;

}  // namespace detail

inline SelectionResult random_select(const DataMatrix& a, Index k, std::uint64_t seed) {
  detail::Stopwatch clock;
  detail::require_k(k, a.rows(), "random_select");
  std::vector<Index> pool(static_cast<std::size_t>(a.rows()));
  std::iota(pool.begin(), pool.end(), Index{0});
  Rng rng(seed);
  for (Index i = 0; i < k; ++i) {
    const auto remaining = static_cast<std::uint64_t>(a.rows() - i);
    const auto j = i + static_cast<Index>(rng.index(remaining));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  SelectionResult r;
  r.method = "random";
  r.indices.assign(pool.begin(), pool.begin() + k);
  r.parameters["k"] = static_cast<std::int64_t>(k);
  r.parameters["seed"] = static_cast<std::int64_t>(seed);
  r.elapsed_seconds = clock.seconds();
  return r;
}

/// Evenly spaced indices round(i (M-1) / (K-1)), deduplicated.
inline SelectionResult uniform_select(Index m, Index k) {
  detail::Stopwatch clock;
  if (m < 1) throw std::invalid_argument("uniform_select: M must be positive");
  if (k < 0) throw std::invalid_argument("uniform_select: K must be non-negative");
  SelectionResult r;
  r.method = "uniform";
  r.parameters["k"] = static_cast<std::int64_t>(k);
  if (k == 1) r.indices.push_back(0);
  for (Index i = 0; k > 1 && i < k; ++i) {
    // Round half up in integer arithmetic.
    const Index idx = (2 * i * (m - 1) + (k - 1)) / (2 * (k - 1));
    if (r.indices.empty() || r.indices.back() != idx) r.indices.push_back(idx);
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

/// PAM k-medoids on Euclidean row distances: greedy BUILD, then SWAP with
/// the best improving exchange until none improves or max_swaps is reached.
/// PAM is deterministic; the seed is recorded but not consumed.
inline SelectionResult kmedoids_select(const DataMatrix& a, Index k, std::uint64_t seed = 0, int max_swaps = 100) {
  detail::Stopwatch clock;
  detail::require_k(k, a.rows(), "kmedoids_select");
  const Index m = a.rows();
  SelectionResult r;
  r.method = "kmedoids";
  r.parameters["k"] = static_cast<std::int64_t>(k);
  r.parameters["seed"] = static_cast<std::int64_t>(seed);
  r.parameters["max_swaps"] = static_cast<std::int64_t>(max_swaps);
  if (k == 0) return r;

  const Matrix dist = detail::pairwise_distances(a.values());
  std::vector<Index> medoids;
  std::vector<bool> is_medoid(static_cast<std::size_t>(m), false);

  // BUILD
  {
    const Vector sums = dist.colwise().sum();
    Index first = 0;
    for (Index i = 1; i < m; ++i) {
      if (sums[i] < sums[first]) first = i;
    }
    medoids.push_back(first);
    is_medoid[static_cast<std::size_t>(first)] = true;
  }
  Vector nearest = dist.col(medoids[0]);
  while (static_cast<Index>(medoids.size()) < k) {
    Index best = -1;
    double best_gain = -1.0;
    for (Index h = 0; h < m; ++h) {
      if (is_medoid[static_cast<std::size_t>(h)]) continue;
      const double gain = (nearest - dist.col(h)).cwiseMax(0.0).sum();
      if (gain > best_gain) {
        best_gain = gain;
        best = h;
      }
    }
    medoids.push_back(best);
    is_medoid[static_cast<std::size_t>(best)] = true;
    nearest = nearest.cwiseMin(dist.col(best));
  }

  // SWAP. For each point keep the distance to its nearest and second-nearest
  // medoid and the slot of the nearest.
  std::vector<Index> near_slot(static_cast<std::size_t>(m));
  Vector d1(m);
  Vector d2(m);
  auto refresh = [&]() {
    for (Index j = 0; j < m; ++j) {
      double best = std::numeric_limits<double>::infinity();
      double second = std::numeric_limits<double>::infinity();
      Index slot = 0;
      for (Index s = 0; s < k; ++s) {
        const double d = dist(medoids[static_cast<std::size_t>(s)], j);
        if (d < best) {
          second = best;
          best = d;
          slot = s;
        } else if (d < second) {
          second = d;
        }
      }
      d1[j] = best;
      d2[j] = second;
      near_slot[static_cast<std::size_t>(j)] = slot;
    }
  };
  refresh();

  int swaps = 0;
  std::vector<double> delta(static_cast<std::size_t>(k));
  while (swaps < max_swaps) {
    const double cost = d1.sum();
    double best_delta = 0.0;
    Index best_slot = -1;
    Index best_h = -1;
    for (Index h = 0; h < m; ++h) {
      if (is_medoid[static_cast<std::size_t>(h)]) continue;
      // Change in total cost if h replaces the medoid in each slot.
      double shared = 0.0;
      std::fill(delta.begin(), delta.end(), 0.0);
      for (Index j = 0; j < m; ++j) {
        const double dj = dist(h, j);
        const double keep = std::min(dj - d1[j], 0.0);
        shared += keep;
        const auto s = static_cast<std::size_t>(near_slot[static_cast<std::size_t>(j)]);
        delta[s] += std::min(dj, d2[j]) - d1[j] - keep;
      }
      for (Index s = 0; s < k; ++s) {
        const double total = shared + delta[static_cast<std::size_t>(s)];
        if (total < best_delta) {
          best_delta = total;
          best_slot = s;
          best_h = h;
        }
      }
    }
    if (best_slot < 0 || !(best_delta < -1e-12 * cost)) break;
    is_medoid[static_cast<std::size_t>(medoids[static_cast<std::size_t>(best_slot)])] = false;
    medoids[static_cast<std::size_t>(best_slot)] = best_h;
    is_medoid[static_cast<std::size_t>(best_h)] = true;
    refresh();
    ++swaps;
  }
  if (swaps == max_swaps) r.warnings.push_back("kmedoids: stopped at max_swaps = " + std::to_string(max_swaps));

  r.indices = std::move(medoids);
  r.parameters["swaps"] = static_cast<std::int64_t>(swaps);
  r.parameters["cost"] = d1.sum();
  r.elapsed_seconds = clock.seconds();
  return r;
}

/// Greedy D-optimal design: repeatedly add the row with the largest residual
/// norm against the span of the rows already chosen.
inline SelectionResult det_greedy_select(const DataMatrix& a, Index k) {
  detail::Stopwatch clock;
  detail::require_k(k, a.rows(), "det_greedy_select");
  const Index m = a.rows();
  SelectionResult r;
  r.method = "detgreedy";
  r.parameters["k"] = static_cast<std::int64_t>(k);

  Matrix residual = a.values();
  const Vector original = residual.rowwise().norm();
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  Vector norms = original;
  for (Index step = 0; step < k; ++step) {
    Index best = -1;
    for (Index i = 0; i < m; ++i) {
      if (used[static_cast<std::size_t>(i)] || !(norms[i] > detail::kPivotEps * original[i])) continue;
      if (best < 0 || detail::clearly_greater(norms[i], norms[best])) best = i;
    }
    if (best < 0) {
      r.warnings.push_back("detgreedy: rank exhausted after " + std::to_string(step) + " selections");
      break;
    }
    used[static_cast<std::size_t>(best)] = true;
    r.indices.push_back(best);
    const Vector direction = residual.row(best).transpose() / norms[best];
    detail::deflate_in_place(residual, direction);
    norms = residual.rowwise().norm();
    r.residual_energies.push_back(residual.squaredNorm());
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

/// Householder QR with column pivoting on A^T; the first K pivots are the
/// selected rows. Column norms are recomputed from the trailing block at
/// every step rather than downdated.
inline SelectionResult qrcp_select(const DataMatrix& a, Index k) {
  detail::Stopwatch clock;
  detail::require_k(k, a.rows(), "qrcp_select");
  SelectionResult r;
  r.method = "qrcp";
  r.parameters["k"] = static_cast<std::int64_t>(k);

  Matrix b = a.values().transpose();  // N x M, columns are samples
  const Index n = b.rows();
  const Index m = b.cols();
  std::vector<Index> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), Index{0});
  Vector original = b.colwise().norm();

  for (Index j = 0; j < k; ++j) {
    Index pivot = -1;
    double pivot_norm = 0.0;
    if (j < n) {
      for (Index c = j; c < m; ++c) {
        const double norm = b.col(c).tail(n - j).norm();
        if (!(norm > detail::kPivotEps * original[c])) continue;
        const bool better = pivot < 0 || detail::clearly_greater(norm, pivot_norm) ||
                            (!detail::clearly_greater(pivot_norm, norm) &&
                             perm[static_cast<std::size_t>(c)] < perm[static_cast<std::size_t>(pivot)]);
        if (better) {
          pivot = c;
          pivot_norm = norm;
        }
      }
    }
    if (pivot < 0) {
      r.warnings.push_back("qrcp: rank exhausted after " + std::to_string(j) + " pivots");
      break;
    }
    b.col(j).swap(b.col(pivot));
    std::swap(perm[static_cast<std::size_t>(j)], perm[static_cast<std::size_t>(pivot)]);
    std::swap(original[j], original[pivot]);
    r.indices.push_back(perm[static_cast<std::size_t>(j)]);

    // Householder reflector zeroing b(j+1:, j), applied to the trailing columns.
    Vector x = b.col(j).tail(n - j);
    const double alpha = x[0] >= 0.0 ? -x.norm() : x.norm();
    x[0] -= alpha;
    const double vnorm = x.norm();
    if (vnorm > 0.0) {
      x /= vnorm;
      auto trailing = b.bottomRightCorner(n - j, m - j);
      trailing.noalias() -= 2.0 * x * (x.transpose() * trailing);
    }
  }
  r.elapsed_seconds = clock.seconds();
  return r;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (c > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    c = c * num / i;
  }
  return c;
}

/// Every K-subset of rows with its volume det(A_T A_T^T).
struct VolumeTable {
  Index k = 0;
  std::vector<Index> subsets;  // count * k, lexicographic order
  std::vector<double> weights;
  double total = 0.0;

  std::size_t count() const { return weights.size(); }
  std::vector<Index> subset(std::size_t i) const {
    const auto first = subsets.begin() + static_cast<std::ptrdiff_t>(i * static_cast<std::size_t>(k));
    return {first, first + k};
  }
};

// Calls f(subset) for each K-subset of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(Index m, Index k, F&& f) {
  std::vector<Index> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), Index{0});
  if (k > m) return;
  while (true) {
    f(static_cast<const std::vector<Index>&>(idx));
    Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Gram determinant of the chosen rows. Values below 1e-12 of the Hadamard
/// bound are reported as zero.
inline double subset_volume(const Matrix& a, const std::vector<Index>& rows) {
  const auto k = static_cast<Index>(rows.size());
  if (k == 0) return 1.0;
  Matrix sub(k, a.cols());
  for (Index i = 0; i < k; ++i) sub.row(i) = a.row(rows[static_cast<std::size_t>(i)]);
  const Matrix gram = sub * sub.transpose();
  const double det = gram.determinant();
  const double hadamard = gram.diagonal().prod();
  if (!(det > 1e-12 * hadamard)) return 0.0;
  return det;
}

inline VolumeTable enumerate_volumes(const DataMatrix& a, Index k, std::uint64_t cap = 200000) {
  detail::require_k(k, a.rows(), "enumerate_volumes");
  const std::uint64_t count = binomial(static_cast<std::uint64_t>(a.rows()), static_cast<std::uint64_t>(k));
  if (count > cap) {
    throw std::invalid_argument("enumerate_volumes: C(M, K) = " + std::to_string(count) +
                                " exceeds the enumeration cap " + std::to_string(cap));
  }
  VolumeTable t;
  t.k = k;
  t.subsets.reserve(static_cast<std::size_t>(count * static_cast<std::uint64_t>(k)));
  t.weights.reserve(static_cast<std::size_t>(count));
  for_each_subset(a.rows(), k, [&](const std::vector<Index>& s) {
    t.subsets.insert(t.subsets.end(), s.begin(), s.end());
    t.weights.push_back(subset_volume(a.values(), s));
  });
  for (double w : t.weights) t.total += w;
  return t;
}

/// Draws K-subsets with probability proportional to their volume.
class VolumeSampler {
 public:
  explicit VolumeSampler(VolumeTable table) : table_(std::move(table)) {
    if (!(table_.total > 0.0)) {
      throw std::invalid_argument("volume sampling: every K-subset has zero volume (K exceeds the rank)");
    }
    cumulative_.resize(table_.count());
    std::partial_sum(table_.weights.begin(), table_.weights.end(), cumulative_.begin());
  }

  std::size_t draw_position(Rng& rng) const {
    const double u = rng.uniform() * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    auto pos = static_cast<std::size_t>(it - cumulative_.begin());
    if (pos >= cumulative_.size()) pos = cumulative_.size() - 1;
    while (table_.weights[pos] == 0.0 && pos > 0) --pos;
    return pos;
  }

  std::vector<Index> draw(Rng& rng) const { return table_.subset(draw_position(rng)); }
  const VolumeTable& table() const { return table_; }

 private:
  VolumeTable table_;
  std::vector<double> cumulative_;
};

/// Exact volume sampling by enumeration when C(M, K) <= enumeration_cap,
/// otherwise the determinant-greedy surrogate (reported in parameters.mode).
inline SelectionResult volume_select(const DataMatrix& a, Index k, std::uint64_t seed = 0,
                                     std::uint64_t enumeration_cap = 200000) {
  detail::Stopwatch clock;
  detail::require_k(k, a.rows(), "volume_select");
  const std::uint64_t count = binomial(static_cast<std::uint64_t>(a.rows()), static_cast<std::uint64_t>(k));
  SelectionResult r;
  if (count > enumeration_cap) {
    r = det_greedy_select(a, k);
    r.parameters["mode"] = std::string("greedy_fallback");
    r.warnings.push_back("volume: C(M, K) = " + std::to_string(count) + " exceeds cap " +
                         std::to_string(enumeration_cap) + "; used determinant greedy");
  } else {
    VolumeSampler sampler(enumerate_volumes(a, k, enumeration_cap));
    Rng rng(seed);
    r.indices = sampler.draw(rng);
    r.parameters["mode"] = std::string("exact");
  }
  r.method = "volume";
  r.parameters["k"] = static_cast<std::int64_t>(k);
  r.parameters["seed"] = static_cast<std::int64_t>(seed);
  r.parameters["enumeration_cap"] = static_cast<std::int64_t>(enumeration_cap);
  r.elapsed_seconds = clock.seconds();
  return r;
}

struct KMeansResult {
  std::vector<Index> labels;
  Matrix centers;  // K x N
  int iterations = 0;
};

/// k-means++ seeding followed by Lloyd iterations. Empty clusters keep
/// their previous center.
inline KMeansResult kmeans(const Matrix& a, Index k, std::uint64_t seed, int max_iter = 100) {
  const Index m = a.rows();
  Rng rng(seed);
  std::vector<Index> chosen;
  chosen.push_back(static_cast<Index>(rng.index(static_cast<std::uint64_t>(m))));
  Vector d2 = (a.rowwise() - a.row(chosen[0])).rowwise().squaredNorm();
  while (static_cast<Index>(chosen.size()) < k) {
    const double total = d2.sum();
    Index next = -1;
    if (total > 0.0) {
      const double u = rng.uniform() * total;
      double acc = 0.0;
      for (Index i = 0; i < m; ++i) {
        acc += d2[i];
        if (d2[i] > 0.0 && acc > u) {
          next = i;
          break;
        }
      }
      if (next < 0) {
        for (Index i = m - 1; i >= 0; --i) {
          if (d2[i] > 0.0) {
            next = i;
            break;
          }
        }
      }
    } else {
      // All points coincide with a center: take the lowest index not chosen.
      for (Index i = 0; i < m && next < 0; ++i) {
        if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) next = i;
      }
    }
    chosen.push_back(next);
    d2 = d2.cwiseMin((a.rowwise() - a.row(next)).rowwise().squaredNorm());
  }

  KMeansResult km;
  km.centers.resize(k, a.cols());
  for (Index c = 0; c < k; ++c) km.centers.row(c) = a.row(chosen[static_cast<std::size_t>(c)]);
  km.labels.assign(static_cast<std::size_t>(m), -1);
  for (int it = 0; it < max_iter; ++it) {
    bool changed = false;
    for (Index i = 0; i < m; ++i) {
      Index best = 0;
      double best_d = (a.row(i) - km.centers.row(0)).squaredNorm();
      for (Index c = 1; c < k; ++c) {
        const double d = (a.row(i) - km.centers.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      if (km.labels[static_cast<std::size_t>(i)] != best) {
        km.labels[static_cast<std::size_t>(i)] = best;
        changed = true;
      }
    }
    km.iterations = it + 1;
    if (!changed) break;
    Matrix sums = Matrix::Zero(k, a.cols());
    std::vector<Index> counts(static_cast<std::size_t>(k), 0);
    for (Index i = 0; i < m; ++i) {
      const Index c = km.labels[static_cast<std::size_t>(i)];
      sums.row(c) += a.row(i);
      ++counts[static_cast<std::size_t>(c)];
    }
    for (Index c = 0; c < k; ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) {
        km.centers.row(c) = sums.row(c) / static_cast<double>(counts[static_cast<std::size_t>(c)]);
      }
    }
  }
  return km;
}

/// Clusters the rows into K groups with k-means++ and picks one row per
/// non-empty cluster with the inner method.
inline SelectionResult cluster_pick_select(const DataMatrix& a, Index k, InnerPick inner = InnerPick::medoid,
                                           std::uint64_t seed = 0, int max_iter = 100) {
  detail::Stopwatch clock;
  detail::require_k(k, a.rows(), "cluster_pick_select");
  SelectionResult r;
  r.method = "clusterpick";
  r.parameters["k"] = static_cast<std::int64_t>(k);
  r.parameters["seed"] = static_cast<std::int64_t>(seed);
  r.parameters["inner"] = std::string(inner == InnerPick::random ? "random"
                                      : inner == InnerPick::medoid ? "medoid"
                                                                   : "ipm");
  if (k == 0) return r;

  Rng rng(seed);
  Rng kmeans_rng = rng.split();
  Rng pick_rng = rng.split();
  const KMeansResult km = kmeans(a.values(), k, kmeans_rng.bits(), max_iter);

  for (Index c = 0; c < k; ++c) {
    std::vector<Index> members;
    for (Index i = 0; i < a.rows(); ++i) {
      if (km.labels[static_cast<std::size_t>(i)] == c) members.push_back(i);
    }
    if (members.empty()) {
      r.warnings.push_back("clusterpick: cluster " + std::to_string(c) + " is empty; skipped");
      continue;
    }
    Index pick = members.front();
    switch (inner) {
      case InnerPick::random:
        pick = members[static_cast<std::size_t>(pick_rng.index(members.size()))];
        break;
      case InnerPick::medoid: {
        double best = std::numeric_limits<double>::infinity();
        for (Index cand : members) {
          double sum = 0.0;
          for (Index other : members) sum += (a.row(cand) - a.row(other)).norm();
          if (sum < best) {
            best = sum;
            pick = cand;
          }
        }
        break;
      }
      case InnerPick::ipm: {
        Matrix sub(static_cast<Index>(members.size()), a.cols());
        for (std::size_t i = 0; i < members.size(); ++i) sub.row(static_cast<Index>(i)) = a.row(members[i]);
        IpmOptions opts;
        opts.power.seed = seed;
        const SelectionResult inner_result = ipm_select(DataMatrix(std::move(sub)), 1, opts);
        if (!inner_result.indices.empty()) {
          pick = members[static_cast<std::size_t>(inner_result.indices.front())];
        } else {
          r.warnings.push_back("clusterpick: cluster " + std::to_string(c) + " is all zero; took its first row");
        }
        break;
      }
    }
    r.indices.push_back(pick);
  }
  r.parameters["kmeans_iterations"] = static_cast<std::int64_t>(km.iterations);
  r.elapsed_seconds = clock.seconds();
  return r;
}

inline SelectionResult run_baseline(const DataMatrix& a, Index k, const BaselineSpec& spec) {
  switch (spec.method) {
    case BaselineMethod::random:
      return random_select(a, k, spec.seed);
    case BaselineMethod::uniform:
      return uniform_select(a.rows(), k);
    case BaselineMethod::kmedoids:
      return kmedoids_select(a, k, spec.seed, spec.max_swaps);
    case BaselineMethod::volume_exact:
      return volume_select(a, k, spec.seed, spec.enumeration_cap);
    case BaselineMethod::det_greedy:
      return det_greedy_select(a, k);
    case BaselineMethod::qrcp:
      return qrcp_select(a, k);
    case BaselineMethod::cluster_pick:
      return cluster_pick_select(a, k, spec.inner, spec.seed, spec.kmeans_max_iter);
  }
  throw std::invalid_argument("run_baseline: unhandled method");
}

}  // namespace subsel
