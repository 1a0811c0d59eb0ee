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
#include <limits>

#include <gtest/gtest.h>

#include "subsel/linalg.hpp"
#include "subsel/random.hpp"
#include "support.hpp"

namespace subsel {
namespace {

using testing::gaussian;

TEST(DataMatrix, RejectsNonFiniteAndEmpty) {
  Matrix m = Matrix::Ones(2, 2);
  m(1, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(DataMatrix{m}, std::invalid_argument);
  m(1, 1) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(DataMatrix{m}, std::invalid_argument);
  EXPECT_THROW(DataMatrix{Matrix(0, 3)}, std::invalid_argument);
  EXPECT_THROW(DataMatrix::from_rows({{1.0, 2.0}, {3.0}}), std::invalid_argument);
}

TEST(NormalizeRows, IdentityUnchanged) {
  const auto r = normalize_rows(DataMatrix::from_rows({{1, 0}, {0, 1}}));
  EXPECT_EQ(r.normalized.values(), Matrix::Identity(2, 2));
  EXPECT_DOUBLE_EQ(r.norms[0], 1.0);
  EXPECT_DOUBLE_EQ(r.norms[1], 1.0);
  EXPECT_TRUE(r.live[0]);
  EXPECT_TRUE(r.live[1]);
}

TEST(NormalizeRows, ThreeFourFive) {
  const auto r = normalize_rows(DataMatrix::from_rows({{3, 4}}));
  EXPECT_DOUBLE_EQ(r.normalized(0, 0), 0.6);
  EXPECT_DOUBLE_EQ(r.normalized(0, 1), 0.8);
  EXPECT_DOUBLE_EQ(r.norms[0], 5.0);
}

TEST(NormalizeRows, ZeroRowFlaggedDead) {
  const auto r = normalize_rows(DataMatrix::from_rows({{0, 0, 0}, {1, 2, 2}}), 1e-12);
  EXPECT_FALSE(r.live[0]);
  EXPECT_TRUE(r.live[1]);
  EXPECT_EQ(r.normalized.values().row(0).squaredNorm(), 0.0);
  EXPECT_THROW(normalize_rows(DataMatrix::from_rows({{1}}), 0.0), std::invalid_argument);
}

TEST(LeadingTriplet, Diagonal) {
  const auto t = leading_singular_triplet(DataMatrix::from_rows({{3, 0}, {0, 1}}));
  EXPECT_NEAR(t.sigma, 3.0, 1e-12);
  EXPECT_NEAR(t.right[0], 1.0, 1e-9);
  EXPECT_NEAR(t.right[1], 0.0, 1e-9);
  EXPECT_TRUE(t.converged);
  EXPECT_FALSE(t.zero);
}

TEST(LeadingTriplet, RankOneProductOfNorms) {
  Vector a(3), b(2);
  a << 2, 0, 0;
  b << 0, 3;
  const auto t = leading_singular_triplet(DataMatrix(a * b.transpose()));
  EXPECT_NEAR(t.sigma, 6.0, 1e-12);
  // canonical sign: first non-negligible coordinate positive
  EXPECT_NEAR(t.right[1], 1.0, 1e-12);
}

TEST(LeadingTriplet, MatchesEigensolverOracle) {
  const Matrix a = gaussian(6, 4, 0);
  const auto t = leading_singular_triplet(DataMatrix(a), 1e-9, 1000, 0);
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.transpose() * a);
  const double sigma = std::sqrt(es.eigenvalues()[3]);
  EXPECT_NEAR(t.sigma / sigma, 1.0, 1e-8);
  EXPECT_NEAR(std::abs(t.right.dot(testing::reference_leading_right(a))), 1.0, 1e-8);
}

TEST(LeadingTriplet, InvariantsOnTripletResidual) {
  const Matrix a = gaussian(9, 5, 4);
  const auto t = leading_singular_triplet(DataMatrix(a));
  EXPECT_NEAR(t.left.norm(), 1.0, 1e-10);
  EXPECT_NEAR(t.right.norm(), 1.0, 1e-10);
  EXPECT_LE((a * t.right - t.sigma * t.left).norm(), 1e-9 * a.norm());
}

TEST(LeadingTriplet, ZeroMatrixFlagged) {
  const auto t = leading_singular_triplet(DataMatrix(Matrix::Zero(3, 2)));
  EXPECT_TRUE(t.zero);
  EXPECT_EQ(t.sigma, 0.0);
  EXPECT_NEAR(t.right.norm(), 1.0, 1e-12);
  EXPECT_NEAR(t.left.norm(), 1.0, 1e-12);
}

TEST(LeadingTriplet, NonConvergenceReturnsIterate) {
  // Equal top singular values: the iterate need not settle in two steps.
  const Matrix a = gaussian(20, 10, 3);
  const auto t = leading_singular_triplet(DataMatrix(a), 1e-15, 2, 0);
  EXPECT_FALSE(t.converged);
  EXPECT_NEAR(t.right.norm(), 1.0, 1e-12);
}

TEST(LeadingTriplet, DeterministicGivenSeed) {
  const DataMatrix a(gaussian(15, 7, 11));
  const auto x = leading_singular_triplet(a, 1e-9, 1000, 5);
  const auto y = leading_singular_triplet(a, 1e-9, 1000, 5);
  EXPECT_EQ(x.sigma, y.sigma);
  EXPECT_EQ(x.right, y.right);
}

TEST(LeadingTriplet, SweepAgainstFullSpectrum) {
  int tested = 0;
  for (std::uint64_t s = 0; tested < 100; ++s) {
    Rng rng(s);
    const auto m = static_cast<Index>(2 + rng.index(49));
    const auto n = static_cast<Index>(2 + rng.index(49));
    const Matrix a = gaussian(m, n, 1000 + s);
    const Vector sv = full_spectrum(a).values;
    if (sv[0] / sv[1] < 1.01) continue;
    ++tested;
    const auto t = leading_singular_triplet(DataMatrix(a), 1e-9, 1000, s);
    EXPECT_NEAR(t.sigma / sv[0], 1.0, 1e-7) << "seed " << s;
  }
}

TEST(DeflateRows, CoordinateProjector) {
  const DataMatrix a = DataMatrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  const DataMatrix r = deflate_rows(a, Vector::Unit(3, 0));
  EXPECT_EQ(r.values().col(0), Vector::Zero(2));
  EXPECT_EQ(r.values().rightCols(2), a.values().rightCols(2));
}

TEST(DeflateRows, LeadingVectorExposesSecondSingularValue) {
  const Matrix a = gaussian(8, 5, 21);
  const Spectrum s = full_spectrum(a);
  const DataMatrix r = deflate_rows(DataMatrix(a), s.right.col(0));
  EXPECT_NEAR(full_spectrum(r).values[0], s.values[1], 1e-8);
}

TEST(DeflateRows, IdempotentAndOrthogonal) {
  const Matrix a = gaussian(10, 6, 2);
  Vector d = gaussian(6, 1, 3).col(0);
  d.normalize();
  const DataMatrix once = deflate_rows(DataMatrix(a), d);
  const DataMatrix twice = deflate_rows(once, d);
  EXPECT_LE((once.values() - twice.values()).cwiseAbs().maxCoeff(), 1e-12);
  for (Index i = 0; i < once.rows(); ++i) {
    const Vector row = once.row(i).transpose();
    EXPECT_LE(std::abs(row.dot(d)), 1e-10 * std::max(1.0, row.norm()));
  }
}

TEST(DeflateRows, RejectsNonUnitDirection) {
  const DataMatrix a = DataMatrix::from_rows({{1, 2}});
  EXPECT_THROW(deflate_rows(a, Vector::Constant(2, 1.0)), std::invalid_argument);
  EXPECT_THROW(deflate_rows(a, Vector::Unit(3, 0)), std::invalid_argument);
}

TEST(DeflateRows, SequentialDeflationEqualsProjection) {
  const Matrix a = gaussian(12, 7, 8);
  const Matrix q = gaussian(7, 3, 9).householderQr().householderQ() * Matrix::Identity(7, 3);
  DataMatrix r(a);
  OrthonormalBasis basis(7);
  for (Index i = 0; i < 3; ++i) {
    r = deflate_rows(r, q.col(i));
    ASSERT_TRUE(basis.extend(q.col(i), 1e-8));
  }
  const Residual p = project_residual(DataMatrix(a), basis);
  EXPECT_LE((r.values() - p.matrix.values()).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(OrthonormalBasis, ExtendCases) {
  OrthonormalBasis e1(3);
  ASSERT_TRUE(e1.extend(Vector::Unit(3, 0), 1e-8));

  auto x = extend_orthonormal_basis(e1, Vector::Unit(3, 1));
  EXPECT_TRUE(x.accepted);
  EXPECT_EQ(x.basis.size(), 2);
  EXPECT_NEAR((x.basis.vector(1) - Vector::Unit(3, 1)).norm(), 0.0, 1e-15);

  auto y = extend_orthonormal_basis(e1, 2.0 * Vector::Unit(3, 0));
  EXPECT_FALSE(y.accepted);
  EXPECT_EQ(y.basis.size(), 1);

  Vector w(3);
  w << 1, 1, 0;
  w /= std::sqrt(2.0);
  auto z = extend_orthonormal_basis(e1, w);
  EXPECT_TRUE(z.accepted);
  EXPECT_NEAR((z.basis.vector(1) - Vector::Unit(3, 1)).norm(), 0.0, 1e-15);
  EXPECT_EQ(e1.size(), 1);  // input untouched

  EXPECT_FALSE(extend_orthonormal_basis(e1, Vector::Zero(3)).accepted);
  EXPECT_THROW(extend_orthonormal_basis(e1, Vector::Zero(4)), std::invalid_argument);
}

TEST(OrthonormalBasis, StaysOrthonormalOnIllConditionedInput) {
  Matrix a = gaussian(6, 8, 13);
  a.row(1) = a.row(0) + 1e-7 * a.row(1);  // nearly parallel rows
  OrthonormalBasis q(8);
  for (Index i = 0; i < a.rows(); ++i) q.extend(a.row(i).transpose(), 1e-8);
  const Matrix g = q.vectors().transpose() * q.vectors();
  EXPECT_LE((g - Matrix::Identity(q.size(), q.size())).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(ProjectResidual, HandCases) {
  const DataMatrix a = DataMatrix::from_rows({{1, 0}, {1, 1}});
  const Residual none = project_residual(a, OrthonormalBasis(2));
  EXPECT_EQ(none.matrix, a);
  EXPECT_DOUBLE_EQ(none.energy, 3.0);

  OrthonormalBasis e1(2);
  e1.extend(Vector::Unit(2, 0), 1e-8);
  const Residual r = project_residual(a, e1);
  EXPECT_EQ(r.matrix, DataMatrix::from_rows({{0, 0}, {0, 1}}));
  EXPECT_DOUBLE_EQ(r.energy, 1.0);
}

TEST(ProjectResidual, FullSpanAndEnergyConservation) {
  const Matrix a = gaussian(10, 4, 17);
  OrthonormalBasis q(4);
  for (Index i = 0; i < 10; ++i) q.extend(a.row(i).transpose(), 1e-8);
  EXPECT_LE(project_residual(DataMatrix(a), q).energy, 1e-10 * a.squaredNorm());

  OrthonormalBasis partial(4);
  partial.extend(a.row(0).transpose(), 1e-8);
  partial.extend(a.row(3).transpose(), 1e-8);
  const Residual r = project_residual(DataMatrix(a), partial);
  const double projected = (a * partial.vectors()).squaredNorm();
  EXPECT_NEAR((projected + r.energy) / a.squaredNorm(), 1.0, 1e-8);
}

TEST(FullSpectrum, KnownSpectra) {
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 3, 2, 1;
  const Vector s = full_spectrum(d).values;
  EXPECT_NEAR(s[0], 3, 1e-14);
  EXPECT_NEAR(s[1], 2, 1e-14);
  EXPECT_NEAR(s[2], 1, 1e-14);

  const Matrix q = gaussian(3, 3, 5).householderQr().householderQ();
  const Vector one = full_spectrum(q).values;
  for (Index i = 0; i < 3; ++i) EXPECT_NEAR(one[i], 1.0, 1e-12);
}

TEST(FullSpectrum, FrobeniusIdentityAndCap) {
  const Matrix a = gaussian(8, 5, 1);
  const Vector s = full_spectrum(a).values;
  EXPECT_NEAR(s.squaredNorm() / a.squaredNorm(), 1.0, 1e-10);
  for (Index i = 1; i < s.size(); ++i) EXPECT_GE(s[i - 1], s[i]);
  EXPECT_THROW(full_spectrum(a, 4), std::invalid_argument);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.bits(), b.bits());
  Rng parent(42);
  Rng child = parent.split();
  EXPECT_NE(child.bits(), Rng(42).bits());
  Rng u(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
    EXPECT_LT(u.index(7), 7u);
  }
}

TEST(Rng, NormalMoments) {
  Rng rng(9);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.01);
}

}  // namespace
}  // namespace subsel
