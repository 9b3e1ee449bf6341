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

#include "splic/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "splic/error.hpp"

namespace splic {

BinaryMask::BinaryMask(Eigen::Index rows, Eigen::Index cols, bool value) {
  if (rows < 0 || cols < 0) throw ValidationError("mask: negative dimension");
  bits_ = Bits::Constant(rows, cols, value ? 1 : 0);
}

BinaryMask BinaryMask::from_matrix(const Matrix& values) {
  BinaryMask mask(values.rows(), values.cols());
  for (Eigen::Index j = 0; j < values.cols(); ++j) {
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
      const double v = values(i, j);
      if (v != 0.0 && v != 1.0) {
        throw ValidationError("mask entries must be 0 or 1");
      }
      mask.set(i, j, v == 1.0);
    }
  }
  return mask;
}

Eigen::Index BinaryMask::count() const {
  return bits_.cast<Eigen::Index>().sum();
}

double BinaryMask::fraction() const {
  if (bits_.size() == 0) return 0.0;
  return static_cast<double>(count()) / static_cast<double>(bits_.size());
}

Matrix BinaryMask::as_matrix() const { return bits_.cast<double>(); }

std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw ValidationError("uniform_index: bound must be > 0");
  // Values below `threshold` would over-represent the low residues.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t draw = rng();
    if (draw >= threshold) return draw % bound;
  }
}

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BinaryMask generate_mask(Eigen::Index m, Eigen::Index n, double p,
                         std::uint64_t seed) {
  if (m < 1 || n < 1) throw ValidationError("generate_mask: empty shape");
  if (!(p > 0.0 && p <= 1.0)) {
    throw ValidationError("anchor_fraction must lie in (0, 1], got " +
                          std::to_string(p));
  }
  const auto total = static_cast<std::uint64_t>(m * n);
  const auto anchors = static_cast<std::uint64_t>(
      std::llround(p * static_cast<double>(total)));

  std::vector<std::uint64_t> order(total);
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  Rng rng(seed);
  for (std::uint64_t k = 0; k < anchors; ++k) {
    const std::uint64_t pick = k + uniform_index(rng, total - k);
    std::swap(order[k], order[pick]);
  }

  BinaryMask mask(m, n);
  for (std::uint64_t k = 0; k < anchors; ++k) {
    const auto idx = static_cast<Eigen::Index>(order[k]);
    mask.set(idx / n, idx % n, true);
  }
  return mask;
}

BinaryMask complement(const BinaryMask& mask) {
  BinaryMask out(mask.rows(), mask.cols());
  for (Eigen::Index j = 0; j < mask.cols(); ++j) {
    for (Eigen::Index i = 0; i < mask.rows(); ++i) {
      out.set(i, j, !mask(i, j));
    }
  }
  return out;
}

Matrix add_uniform_noise(const Matrix& x, double amplitude,
                         std::uint64_t seed) {
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
    throw ValidationError("noise amplitude must be finite and >= 0");
  }
  Rng rng(seed);
  Matrix out(x.rows(), x.cols());
  // Row-major draw order, matching the mask index convention.
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const double noise = amplitude * (2.0 * uniform_unit(rng) - 1.0);
      out(i, j) = std::clamp(x(i, j) + noise, 0.0, 1.0);
    }
  }
  return out;
}

}  // namespace splic
