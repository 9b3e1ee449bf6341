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

#ifndef SPLIC_SAMPLING_HPP_
#define SPLIC_SAMPLING_HPP_

#include <cstdint>
#include <random>

#include "splic/linalg.hpp"

namespace splic {

// m x n {0,1} anchor selector. A set entry marks a pixel held fixed during
// completion; clear entries are the targets that get re-estimated.
class BinaryMask {
 public:
  using Bits = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

  BinaryMask() = default;
  BinaryMask(Eigen::Index rows, Eigen::Index cols, bool value = false);

  // Every entry must be exactly 0 or 1.
  static BinaryMask from_matrix(const Matrix& values);

  Eigen::Index rows() const { return bits_.rows(); }
  Eigen::Index cols() const { return bits_.cols(); }
  bool operator()(Eigen::Index i, Eigen::Index j) const {
    return bits_(i, j) != 0;
  }
  void set(Eigen::Index i, Eigen::Index j, bool value) {
    bits_(i, j) = value ? 1 : 0;
  }

  Eigen::Index count() const;
  // count() / (rows * cols).
  double fraction() const;
  bool same_shape(const Matrix& x) const {
    return x.rows() == rows() && x.cols() == cols();
  }

  Matrix as_matrix() const;
  const Bits& bits() const { return bits_; }

  friend bool operator==(const BinaryMask& a, const BinaryMask& b) {
    return a.bits_.rows() == b.bits_.rows() &&
           a.bits_.cols() == b.bits_.cols() && a.bits_ == b.bits_;
  }

 private:
  Bits bits_;
};

// Random source used for masks and noise: std::mt19937_64, whose output
// sequence is fixed by the C++ standard for a given seed. Integer and real
// draws below are derived from raw 64-bit outputs only, so results do not
// depend on the standard library's distribution implementations.
using Rng = std::mt19937_64;

// Unbiased integer in [0, bound) by rejection. bound > 0.
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound);
// Real in [0, 1) from the top 53 bits of one draw.
double uniform_unit(Rng& rng);

// Exactly round(p * m * n) anchors at uniformly random positions, drawn
// without replacement by a partial Fisher-Yates shuffle of the row-major
// pixel indices. Same (m, n, p, seed) gives the same mask.
BinaryMask generate_mask(Eigen::Index m, Eigen::Index n, double p,
                         std::uint64_t seed);

BinaryMask complement(const BinaryMask& mask);

// x + U(-amplitude, amplitude) per pixel, clipped to [0, 1]. Stands in for
// a bounded adversarial perturbation when building corrupted test inputs.
Matrix add_uniform_noise(const Matrix& x, double amplitude, std::uint64_t seed);

}  // namespace splic

#endif  // SPLIC_SAMPLING_HPP_
