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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "subsel/baselines.hpp"
#include "subsel/metrics.hpp"
#include "subsel/selection.hpp"
#include "subsel/suites.hpp"
#include "support.hpp"

namespace subsel {
namespace {

using testing::gaussian;

TEST(ProjectionError, HandCaseAndEmpty) {
  const DataMatrix a = DataMatrix::from_rows({{1, 0}, {1, 1}});
  const std::vector<Index> t = {0};
  EXPECT_NEAR(projection_error(a, t), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(projection_error(a, std::vector<Index>{}), 3.0);
}

TEST(ProjectionError, SpanningRowsLeaveNothing) {
  const Matrix a = gaussian(10, 3, 1);
  const std::vector<Index> t = {2, 5, 7};
  EXPECT_LE(projection_error(DataMatrix(a), t), 1e-10 * a.squaredNorm());
}

TEST(ProjectionError, MatchesIpmResidualEnergy) {
  const DataMatrix a(gaussian(8, 5, 0));
  const auto r = ipm_select(a, 3);
  EXPECT_NEAR(projection_error(a, r.indices) / r.residual_energies.back(), 1.0, 1e-7);
  EXPECT_NEAR(projection_error(a, r.indices) / testing::reference_projection_error(a.values(), r.indices), 1.0,
              1e-10);
}

TEST(ProjectionError, RejectsBadIndices) {
  const DataMatrix a(gaussian(4, 2, 1));
  EXPECT_THROW(projection_error(a, std::vector<Index>{0, 0}), std::invalid_argument);
  EXPECT_THROW(projection_error(a, std::vector<Index>{4}), std::invalid_argument);
  EXPECT_THROW(projection_error(a, std::vector<Index>{-1}), std::invalid_argument);
}

TEST(BestRankK, KnownValues) {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 3, 2, 1;
  EXPECT_NEAR(best_rank_k_error(DataMatrix(d), 1), 5.0, 1e-12);
  EXPECT_NEAR(best_rank_k_error(DataMatrix(d), 0), 14.0, 1e-12);
  const Matrix low = gaussian(6, 2, 1) * gaussian(2, 5, 2);
  EXPECT_LE(best_rank_k_error(DataMatrix(low), 2), 1e-20 * low.squaredNorm() + 1e-24);
  EXPECT_EQ(best_rank_k_error(DataMatrix(d), 5), 0.0);
  EXPECT_THROW(best_rank_k_error(DataMatrix(d), -1), std::invalid_argument);
}

TEST(BestRankK, EckartYoungDominatesEveryMethod) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DataMatrix a(gaussian(20, 6, 70 + s));
    for (Index k = 1; k <= 4; ++k) {
      const double floor = best_rank_k_error(a, k);
      EXPECT_LE(floor, projection_error(a, ipm_select(a, k).indices) * (1 + 1e-12));
      for (auto method : {BaselineMethod::random, BaselineMethod::kmedoids, BaselineMethod::det_greedy,
                          BaselineMethod::qrcp, BaselineMethod::cluster_pick, BaselineMethod::uniform}) {
        BaselineSpec spec;
        spec.method = method;
        spec.seed = s;
        EXPECT_LE(floor, projection_error(a, run_baseline(a, k, spec).indices) * (1 + 1e-12));
      }
    }
  }
}

TEST(Rom, KnownValues) {
  EXPECT_NEAR(rom(DataMatrix(gaussian(5, 1, 1) * gaussian(1, 4, 2))), 1.0, 1e-12);
  Matrix equal = Matrix::Zero(5, 3);
  equal.topRows(3) = 2.0 * Matrix::Identity(3, 3);
  EXPECT_NEAR(rom(DataMatrix(equal)), 1.0 / std::sqrt(3.0), 1e-12);
  const Matrix a = gaussian(9, 4, 3);
  EXPECT_NEAR(rom(DataMatrix(a)), full_spectrum(a).values[0] / a.norm(), 1e-12);
  EXPECT_THROW(rom(DataMatrix(Matrix::Zero(2, 2))), std::invalid_argument);
}

TEST(Sensitivity, DirectFormula) {
  const std::vector<double> lambda = {4, 2, 1};
  const auto s = sensitivity_coeffs(lambda);
  EXPECT_NEAR(s[0], std::sqrt(13.0) / 6.0, 1e-15);
  EXPECT_NEAR(s[1], std::sqrt(1.0 / 4 + 1.0), 1e-15);
  EXPECT_NEAR(s[2], std::sqrt(1.0 / 9 + 1.0), 1e-15);
  EXPECT_LT(s[0], s[1]);
  EXPECT_LT(s[0], s[2]);
}

TEST(Sensitivity, NearEqualPairExplodesSymmetrically) {
  const std::vector<double> lambda = {3.0, 1.0 + 1e-6, 1.0};
  const auto s = sensitivity_coeffs(lambda);
  EXPECT_GT(s[1], 0.99e6);
  EXPECT_NEAR(s[1] / s[2], 1.0, 1e-6);
  EXPECT_LT(s[0], 1.0);
  EXPECT_THROW(sensitivity_coeffs(std::vector<double>{2.0, 1.0, 1.0}), std::invalid_argument);
  EXPECT_TRUE(sensitivity_coeffs(std::vector<double>{}).empty());
}

TEST(Diagnose, InvariantsAndPadding) {
  const Matrix a = gaussian(7, 4, 5);
  const auto d = diagnose(DataMatrix(a));
  ASSERT_EQ(d.eigenvalues.size(), 4u);
  double total = 0.0;
  for (double l : d.eigenvalues) total += l;
  EXPECT_NEAR(d.rom * d.rom, d.eigenvalues[0] / total, 1e-10);
  EXPECT_LT(d.sensitivities[0], d.sensitivities[1]);
  const auto direct = sensitivity_coeffs(d.eigenvalues);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(d.sensitivities[i] / direct[i], 1.0, 1e-12);

  const auto wide = diagnose(DataMatrix(gaussian(2, 4, 6)));  // two zero eigenvalues
  ASSERT_EQ(wide.eigenvalues.size(), 4u);
  EXPECT_EQ(wide.eigenvalues[3], 0.0);
  EXPECT_TRUE(std::isinf(wide.sensitivities[2]));
  EXPECT_TRUE(std::isinf(wide.sensitivities[3]));
  EXPECT_TRUE(std::isfinite(wide.sensitivities[0]));
}

TEST(CorrelationBound, KnownMargins) {
  const Index m = 5;
  const Matrix same = Matrix::Ones(m, 1) * (Vector(3) << 0.6, 0.8, 0).finished().transpose();
  // sigma_1 = sqrt(M) and every row has |v^T a| = 1 = sigma_1 / sqrt(M): the bound is tight.
  EXPECT_NEAR(check_lemma1(same), 0.0, 1e-12);
  EXPECT_NEAR(check_lemma1(Matrix(3.0 * same)), 0.0, 1e-12);
  EXPECT_NEAR(check_lemma1(DataMatrix(Matrix::Identity(2, 2))), 1.0 - 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(CorrelationBound, RandomSweepNonNegative) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Rng rng(s);
    const Matrix a = gaussian(static_cast<Index>(1 + rng.index(40)), static_cast<Index>(1 + rng.index(40)), s);
    EXPECT_GE(check_lemma1(a), -1e-9);
    EXPECT_GE(check_rom_bound(a), -1e-9);
  }
}

TEST(RomBound, ZeroRowsDroppedAndZeroMatrixRejected) {
  Matrix a = gaussian(5, 3, 2);
  a.row(2).setZero();
  EXPECT_GE(check_rom_bound(a), -1e-9);
  EXPECT_THROW(check_rom_bound(Matrix::Zero(3, 2)), std::invalid_argument);
}

TEST(VolumeBound, RankKIsExact) {
  const DataMatrix a(gaussian(6, 2, 1) * gaussian(2, 4, 2));
  const auto c = check_vs_bound(a, 2);
  EXPECT_LE(c.lhs, 1e-20 * a.frobenius_sq() + 1e-24);
  EXPECT_TRUE(c.holds());
}

TEST(VolumeBound, OrthogonalEqualNormRows) {
  const Index m = 4;
  const DataMatrix a(3.0 * Matrix::Identity(m, m));
  const auto c = check_vs_bound(a, 1);
  const double f = a.frobenius_sq();
  EXPECT_NEAR(c.lhs, (m - 1.0) / m * f, 1e-12);
  EXPECT_NEAR(c.rhs, 2.0 * (m - 1.0) / m * f, 1e-12);
}

TEST(VolumeBound, RandomMatricesAllK) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DataMatrix a(gaussian(7, 4, 30 + s));
    for (Index k = 1; k <= 3; ++k) EXPECT_TRUE(check_vs_bound(a, k).holds()) << "seed " << s << " K " << k;
  }
}

TEST(Perturbation, ZeroDelta) {
  Matrix c = Matrix::Zero(3, 3);
  c.diagonal() << 5, 2, 1;
  const auto p = check_eigvec_perturbation(c, Matrix::Zero(3, 3), 1);
  EXPECT_EQ(p.lhs, 0.0);
  EXPECT_EQ(p.bound, 0.0);
}

TEST(Perturbation, DiagonalTwoByTwo) {
  const double eps = 1e-6;
  Matrix c = Matrix::Zero(2, 2);
  c.diagonal() << 4, 1;
  const Matrix delta = eps * (Matrix(2, 2) << 0, 1, 1, 0).finished();
  const auto p = check_eigvec_perturbation(c, delta, 0);
  // v_1 turns by (e_2^T dC e_1) / (4 - 1) = eps / 3; the bound is s_1 |dC|_F = sqrt(2) eps / 3
  EXPECT_NEAR(p.lhs / (eps / 3.0), 1.0, 1e-6);
  EXPECT_NEAR(p.bound / (std::sqrt(2.0) * eps / 3.0), 1.0, 1e-12);
  EXPECT_NEAR(p.first_order / (eps / 3.0), 1.0, 1e-12);
  EXPECT_LE(p.lhs, 1.05 * p.bound);
}

TEST(Perturbation, RandomPairsWithinBound) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Rng rng(s);
    const PerturbationCase pc = random_perturbation_case(rng);
    const auto p = check_eigvec_perturbation(pc.c, 1e-6 * pc.direction, pc.i);
    EXPECT_LE(p.lhs, 1.05 * p.bound) << "seed " << s;
    EXPECT_NEAR(p.lhs / p.first_order, 1.0, 1e-4) << "seed " << s;
  }
}

TEST(Perturbation, Preconditions) {
  Matrix c = Matrix::Zero(2, 2);
  c.diagonal() << 4, 1;
  const Matrix sym = 1e-6 * Matrix::Ones(2, 2);
  Matrix skew = sym;
  skew(0, 1) = 2e-6;
  EXPECT_THROW(check_eigvec_perturbation(c, skew, 0), std::invalid_argument);
  EXPECT_THROW(check_eigvec_perturbation(c, 1e-2 * Matrix::Ones(2, 2), 0), std::invalid_argument);
  EXPECT_THROW(check_eigvec_perturbation(c, sym, 2), std::invalid_argument);
  EXPECT_THROW(check_eigvec_perturbation(Matrix::Identity(2, 2), sym, 0), std::invalid_argument);
  EXPECT_THROW(check_eigvec_perturbation(Matrix::Identity(2, 3), sym, 0), std::invalid_argument);
}

}  // namespace
}  // namespace subsel
