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
#include <vector>

#include <gtest/gtest.h>

#include "splic/error.hpp"
#include "splic/metrics.hpp"
#include "test_support.hpp"

namespace splic {
namespace {

using testing::load_natural;
using testing::positive_low_rank;
using testing::random_matrix;

TEST(Psnr, IdenticalImagesAreInfinite) {
  const Matrix a = random_matrix(5, 5, 1, 0.0, 1.0);
  EXPECT_TRUE(std::isinf(psnr(a, a)));
  EXPECT_GT(psnr(a, a), 0.0);
}

TEST(Psnr, HandExamples) {
  EXPECT_NEAR(psnr(Matrix::Zero(4, 4), Matrix::Constant(4, 4, 0.5)),
              10.0 * std::log10(4.0), 1e-12);
  EXPECT_NEAR(psnr(Matrix::Zero(4, 4), Matrix::Constant(4, 4, 0.5)), 6.0206,
              1e-4);
  EXPECT_NEAR(psnr(Matrix::Zero(3, 7), Matrix::Constant(3, 7, 0.1)), 20.0,
              1e-10);
  EXPECT_NEAR(psnr(Matrix::Zero(3, 3), Matrix::Constant(3, 3, 25.5), 255.0),
              20.0, 1e-10);
}

TEST(Psnr, SymmetricAndDecreasingInError) {
  const Matrix a = random_matrix(6, 8, 2, 0.0, 1.0);
  const Matrix b = random_matrix(6, 8, 3, 0.0, 1.0);
  EXPECT_EQ(psnr(a, b), psnr(b, a));
  double previous = INFINITY;
  for (double scale : {0.001, 0.01, 0.1, 0.5, 1.0}) {
    const double value = psnr(a, a + scale * (b - a));
    EXPECT_LT(value, previous);
    previous = value;
  }
}

TEST(Psnr, ChannelsPoolSquaredError) {
  const std::vector<Matrix> a = {Matrix::Zero(2, 2), Matrix::Zero(2, 2)};
  const std::vector<Matrix> b = {Matrix::Constant(2, 2, 0.2),
                                 Matrix::Zero(2, 2)};
  // pooled MSE = 0.04 / 2
  EXPECT_NEAR(psnr(a, b), 10.0 * std::log10(1.0 / 0.02), 1e-12);
}

TEST(Psnr, RejectsBadArguments) {
  EXPECT_THROW(psnr(Matrix::Zero(2, 2), Matrix::Zero(2, 3)), ValidationError);
  EXPECT_THROW(psnr(Matrix::Zero(2, 2), Matrix::Zero(2, 2), 0.0),
               ValidationError);
  EXPECT_THROW(psnr(std::vector<Matrix>{Matrix::Zero(2, 2)},
                    std::vector<Matrix>{}),
               ValidationError);
}

TEST(NuclearNorm, HandExamples) {
  EXPECT_EQ(nuclear_norm(Matrix::Zero(3, 3)), 0.0);
  EXPECT_NEAR(nuclear_norm(Matrix::Identity(4, 4)), 4.0, 1e-12);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  EXPECT_NEAR(nuclear_norm(d), 4.0, 1e-12);
}

TEST(NuclearNorm, BoundsAgainstSpectralAndFrobenius) {
  for (int seed = 0; seed < 50; ++seed) {
    const Matrix x = random_matrix(7 + seed % 5, 9, seed);
    const double l = static_cast<double>(std::min(x.rows(), x.cols()));
    const double sigma1 = svd(x).sigma(0);
    EXPECT_GE(nuclear_norm(x), sigma1 - 1e-12);
    EXPECT_GE(sigma1, x.norm() / std::sqrt(l) - 1e-12);
  }
}

TEST(CompareMethods, FourRowsWithFiniteTimes) {
  const Matrix clean = load_natural("coffee");
  const Matrix noisy = add_uniform_noise(clean, 8.0 / 255.0, 1);
  const ComparisonRecord rec =
      compare_methods(clean, noisy, generate_mask(32, 32, 0.5, 1), {});
  ASSERT_EQ(rec.rows.size(), 4u);
  const std::vector<std::string> names = {"splic", "srf", "soft-impute", "usvt"};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(rec.rows[k].method, names[k]);
    EXPECT_TRUE(std::isfinite(rec.rows[k].seconds));
    EXPECT_GE(rec.rows[k].seconds, 0.0);
    EXPECT_TRUE(std::isfinite(rec.rows[k].psnr_db));
    EXPECT_GE(rec.rows[k].iters, 1);
  }
}

TEST(CompareMethods, CleanFullObservationIsNearlyPerfect) {
  const Matrix clean = load_natural("camera");
  const ComparisonRecord rec =
      compare_methods(clean, clean, BinaryMask(32, 32, true), {});
  ASSERT_EQ(rec.rows.size(), 4u);
  for (const MethodScore& row : rec.rows) {
    EXPECT_GE(row.psnr_db, 60.0) << row.method;
  }
}

TEST(CompareMethods, SplicRecoversRankFourSynthetic) {
  const Matrix truth = positive_low_rank(64, 64, 4, 44);
  const ComparisonRecord rec =
      compare_methods(truth, truth, generate_mask(64, 64, 0.5, 44), {});
  ASSERT_EQ(rec.rows.front().method, "splic");
  EXPECT_GT(rec.rows.front().psnr_db, 35.0);
}

TEST(CompareMethods, ChannelOverloadPoolsPlanes) {
  const std::vector<Matrix> clean = {load_natural("camera"),
                                     load_natural("moon")};
  const std::vector<Matrix> noisy = {add_uniform_noise(clean[0], 0.03, 1),
                                     add_uniform_noise(clean[1], 0.03, 2)};
  const BinaryMask mask = generate_mask(32, 32, 0.5, 3);
  const ComparisonRecord rec = compare_methods(clean, noisy, mask, {});
  const CompletionResult r0 = splic_complete(noisy[0], mask, {});
  const CompletionResult r1 = splic_complete(noisy[1], mask, {});
  EXPECT_DOUBLE_EQ(rec.rows[0].psnr_db,
                   psnr(std::vector<Matrix>{r0.completed, r1.completed}, clean));
  EXPECT_EQ(rec.rows[0].iters, r0.iterations + r1.iterations);
}

}  // namespace
}  // namespace splic
