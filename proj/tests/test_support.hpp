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

#ifndef SPLIC_TESTS_TEST_SUPPORT_HPP_
#define SPLIC_TESTS_TEST_SUPPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "splic/image_io.hpp"
#include "splic/linalg.hpp"

namespace splic::testing {

// Test-only generators; independent of the library's mask/noise RNG paths.
inline Matrix random_matrix(Eigen::Index m, Eigen::Index n,
                            std::uint64_t seed, double lo = -1.0,
                            double hi = 1.0) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  Matrix x(m, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) x(i, j) = dist(gen);
  }
  return x;
}

// Random orthogonal matrix from the Householder QR of a random matrix.
inline Matrix random_orthogonal(Eigen::Index n, std::uint64_t seed) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(n, n, seed));
  return qr.householderQ() * Matrix::Identity(n, n);
}

// Sum of k outer products of positive random vectors, scaled so the largest
// entry is 1. Exact rank k (almost surely).
inline Matrix positive_low_rank(Eigen::Index m, Eigen::Index n, Eigen::Index k,
                                std::uint64_t seed) {
  const Matrix a = random_matrix(m, k, seed, 0.0, 1.0);
  const Matrix b = random_matrix(k, n, seed ^ 0x9e3779b97f4a7c15ull, 0.0, 1.0);
  Matrix x = a * b;
  return x / x.maxCoeff();
}

// Central differences of a scalar function of a matrix.
inline Matrix finite_difference_gradient(
    const std::function<double(const Matrix&)>& f, const Matrix& x,
    double step) {
  Matrix grad(x.rows(), x.cols());
  Matrix probe = x;
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      probe(i, j) = x(i, j) + step;
      const double up = f(probe);
      probe(i, j) = x(i, j) - step;
      const double down = f(probe);
      probe(i, j) = x(i, j);
      grad(i, j) = (up - down) / (2.0 * step);
    }
  }
  return grad;
}

inline std::filesystem::path data_dir() { return SPLIC_TEST_DATA_DIR; }

inline const std::vector<std::string>& natural_names() {
  static const std::vector<std::string> names = {
      "camera", "astronaut", "coffee", "chelsea", "coins",
      "moon",   "rocket",    "clock",  "immunohistochemistry", "retina"};
  return names;
}

inline Matrix load_natural(const std::string& name, int side = 32) {
  return read_image(data_dir() / "natural" /
                    (name + "_" + std::to_string(side) + ".pgm"))
      .channels.at(0);
}

}  // namespace splic::testing

#endif  // SPLIC_TESTS_TEST_SUPPORT_HPP_
