// Copyright 2026 The SPLIC Authors. All Rights Reserved.
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

#include "splic/error.hpp"
#include "splic/linalg.hpp"
#include "test_support.hpp"

namespace splic {
namespace {

using testing::random_matrix;

double relative_error(const Matrix& a, const Matrix& b) {
  return (a - b).norm() / b.norm();
}

TEST(Svd, IdentityHasUnitSingularValues) {
  const SvdFactors f = svd(Matrix::Identity(3, 3));
  EXPECT_NEAR(f.sigma(0), 1.0, 1e-14);
  EXPECT_NEAR(f.sigma(1), 1.0, 1e-14);
  EXPECT_NEAR(f.sigma(2), 1.0, 1e-14);
}

TEST(Svd, DiagonalIsAlreadyDecomposed) {
  Matrix x(2, 2);
  x << 5, 0, 0, 2;
  const SvdFactors f = svd(x);
  EXPECT_NEAR(f.sigma(0), 5.0, 1e-14);
  EXPECT_NEAR(f.sigma(1), 2.0, 1e-14);
  // Sign convention removes the +/- ambiguity entirely here.
  EXPECT_LT((f.U - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT((f.V - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Svd, RandomSquareReconstructs) {
  const Matrix x = random_matrix(8, 8, 11);
  EXPECT_LT(relative_error(svd(x).reconstruct(), x), 1e-10);
}

TEST(Svd, FactorInvariantsHoldOnAssortedShapes) {
  const std::pair<int, int> shapes[] = {{2, 2}, {5, 3}, {3, 7}, {16, 16},
                                        {40, 9}, {1, 4}, {64, 64}};
  std::uint64_t seed = 100;
  for (const auto& [m, n] : shapes) {
    const Matrix x = random_matrix(m, n, ++seed);
    const SvdFactors f = svd(x);
    const Eigen::Index l = std::min(m, n);
    ASSERT_EQ(f.U.rows(), m);
    ASSERT_EQ(f.U.cols(), l);
    ASSERT_EQ(f.V.rows(), n);
    ASSERT_EQ(f.V.cols(), l);
    ASSERT_EQ(f.sigma.size(), l);
    EXPECT_LT(relative_error(f.reconstruct(), x), 1e-10) << m << "x" << n;
    for (Eigen::Index k = 0; k < l; ++k) {
      EXPECT_GE(f.sigma(k), 0.0);
      if (k > 0) EXPECT_LE(f.sigma(k), f.sigma(k - 1));
      Eigen::Index pivot = 0;
      f.U.col(k).cwiseAbs().maxCoeff(&pivot);
      EXPECT_GE(f.U(pivot, k), 0.0);
    }
    EXPECT_LT((f.U.transpose() * f.U - Matrix::Identity(l, l)).norm(), 1e-12);
    EXPECT_LT((f.V.transpose() * f.V - Matrix::Identity(l, l)).norm(), 1e-12);
  }
}

TEST(Svd, IsDeterministic) {
  const Matrix x = random_matrix(12, 9, 5);
  const SvdFactors a = svd(x);
  const SvdFactors b = svd(x);
  EXPECT_EQ(a.U, b.U);
  EXPECT_EQ(a.sigma, b.sigma);
  EXPECT_EQ(a.V, b.V);
}

TEST(Svd, RejectsNonFiniteInput) {
  Matrix x = Matrix::Ones(3, 3);
  x(1, 2) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(svd(x), ValidationError);
  x(1, 2) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(svd(x), ValidationError);
}

TEST(TruncateRank, FullRankKeepsDiagonal) {
  const Matrix x = Eigen::Vector3d(5, 2, 1).asDiagonal();
  EXPECT_LT((truncate_rank(svd(x), 3) - x).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(TruncateRank, RankOneKeepsLeadingValue) {
  const Matrix x = Eigen::Vector3d(5, 2, 1).asDiagonal();
  const Matrix expected = Eigen::Vector3d(5, 0, 0).asDiagonal();
  EXPECT_LT((truncate_rank(svd(x), 1) - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(TruncateRank, NoTruncationAtFullRank) {
  const Matrix x = random_matrix(7, 5, 3);
  EXPECT_LT(relative_error(truncate_rank(svd(x), 5), x), 1e-10);
}

TEST(TruncateRank, RejectsOutOfRangeRank) {
  const SvdFactors f = svd(random_matrix(4, 3, 1));
  EXPECT_THROW(truncate_rank(f, 0), ValidationError);
  EXPECT_THROW(truncate_rank(f, 4), ValidationError);
  EXPECT_THROW(truncate_factors(f, -1), ValidationError);
}

TEST(TruncateRank, FactorsAndMatrixAgree) {
  const SvdFactors f = svd(random_matrix(9, 6, 21));
  const SvdFactors t = truncate_factors(f, 2);
  EXPECT_EQ(t.sigma.tail(4), Vector::Zero(4));
  EXPECT_LT((t.reconstruct() - truncate_rank(f, 2)).norm(), 1e-12);
}

// Eckart-Young on 3x3 with r = 1. For a unit left vector u the best rank-one
// approximation u v^T has v = X^T u and squared error ||X||^2 - ||X^T u||^2,
// so scanning u over the sphere gives an SVD-free optimum.
TEST(TruncateRank, MatchesExhaustiveRankOneSearch) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Matrix x = random_matrix(3, 3, seed);
    double best = std::numeric_limits<double>::infinity();
    constexpr int kSteps = 720;
    const double pi = std::acos(-1.0);
    for (int a = 0; a <= kSteps; ++a) {
      const double theta = pi * a / kSteps;
      for (int b = 0; b < 2 * kSteps; ++b) {
        const double phi = pi * b / kSteps;
        const Eigen::Vector3d u(std::sin(theta) * std::cos(phi),
                                std::sin(theta) * std::sin(phi),
                                std::cos(theta));
        best = std::min(best, x.squaredNorm() -
                                  (x.transpose() * u).squaredNorm());
      }
    }
    const double truncated = (truncate_rank(svd(x), 1) - x).squaredNorm();
    EXPECT_LE(truncated, best + 1e-12) << "seed " << seed;
    EXPECT_NEAR(truncated, best, 1e-3 * x.squaredNorm()) << "seed " << seed;
  }
}

TEST(NumericalRank, ZeroMatrixHasRankZero) {
  EXPECT_EQ(numerical_rank(Matrix::Zero(4, 3), 1e-8), 0);
}

TEST(NumericalRank, CountsRelativeToLeadingValue) {
  const Matrix x = Eigen::Vector3d(5, 2, 1e-12).asDiagonal();
  EXPECT_EQ(numerical_rank(x, 1e-8), 2);
  EXPECT_EQ(numerical_rank(Matrix::Identity(4, 4), 1e-8), 4);
}

TEST(NumericalRank, RejectsNonPositiveTolerance) {
  EXPECT_THROW(numerical_rank(Matrix::Identity(2, 2), 0.0), ValidationError);
  EXPECT_THROW(numerical_rank(Matrix::Identity(2, 2), -1.0), ValidationError);
}

TEST(NumericalRank, TruncationNeverExceedsTarget) {
  std::uint64_t seed = 900;
  for (int m : {6, 11, 20}) {
    for (int n : {5, 13}) {
      const SvdFactors f = svd(random_matrix(m, n, ++seed));
      for (Eigen::Index r = 1; r <= f.rank_bound(); ++r) {
        EXPECT_LE(numerical_rank(truncate_rank(f, r), 1e-8), r);
      }
    }
  }
}

TEST(SolverShape, RejectsDegenerateDimensions) {
  EXPECT_THROW(require_solver_shape(Matrix::Zero(1, 5), "t"), ValidationError);
  EXPECT_THROW(require_solver_shape(Matrix::Zero(5, 1), "t"), ValidationError);
  EXPECT_NO_THROW(require_solver_shape(Matrix::Zero(2, 2), "t"));
}

}  // namespace
}  // namespace splic
