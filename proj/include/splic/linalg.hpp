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

#ifndef SPLIC_LINALG_HPP_
#define SPLIC_LINALG_HPP_

#include <Eigen/Dense>

namespace splic {

// A single real-valued pixel plane. Multi-channel images are stacks of these.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Thin SVD of an m x n matrix with l = min(m, n):
//   source = U * diag(sigma) * V^T
// sigma is non-increasing and non-negative. Each column of U has its
// largest-magnitude entry non-negative (the matching column of V is flipped
// along with it), so the factors are reproducible bit-for-bit.
struct SvdFactors {
  Matrix U;      // m x l
  Vector sigma;  // l
  Matrix V;      // n x l

  Eigen::Index rows() const { return U.rows(); }
  Eigen::Index cols() const { return V.rows(); }
  Eigen::Index rank_bound() const { return sigma.size(); }

  // U * diag(sigma) * V^T.
  Matrix reconstruct() const;
};

// Throws ValidationError if any entry is NaN or infinite.
void require_finite(const Matrix& x, const char* what);

// Throws ValidationError unless x has at least two rows and two columns.
void require_solver_shape(const Matrix& x, const char* what);

// Throws ValidationError unless a and b have identical dimensions.
void require_same_shape(const Matrix& a, const Matrix& b, const char* what);

SvdFactors svd(const Matrix& x);

// U * diag(sigma_1..sigma_r, 0, ..., 0) * V^T. Requires 1 <= r <= l.
Matrix truncate_rank(const SvdFactors& f, Eigen::Index r);

// The same factors with sigma_{r+1..l} set to zero.
SvdFactors truncate_factors(const SvdFactors& f, Eigen::Index r);

// Number of singular values strictly greater than tol * sigma_1.
// Zero for the zero matrix. Requires tol > 0.
Eigen::Index numerical_rank(const Matrix& x, double tol);
// The same count over an already-computed singular value vector.
Eigen::Index numerical_rank_of_sigma(const Vector& sigma, double tol);

}  // namespace splic

#endif  // SPLIC_LINALG_HPP_
