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

#include "splic/linalg.hpp"

#include <string>

#include "splic/error.hpp"

namespace splic {

Matrix SvdFactors::reconstruct() const {
  return U * sigma.asDiagonal() * V.transpose();
}

void require_finite(const Matrix& x, const char* what) {
  if (!x.allFinite()) {
    throw ValidationError(std::string(what) + ": matrix has non-finite entries");
  }
}

void require_solver_shape(const Matrix& x, const char* what) {
  if (x.rows() < 2 || x.cols() < 2) {
    throw ValidationError(std::string(what) + ": need at least 2x2, got " +
                          std::to_string(x.rows()) + "x" +
                          std::to_string(x.cols()));
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError(std::string(what) + ": shape mismatch " +
                          std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " +
                          std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  }
}

SvdFactors svd(const Matrix& x) {
  require_finite(x, "svd");
  if (x.size() == 0) throw ValidationError("svd: empty matrix");

  Eigen::BDCSVD<Matrix> solver(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SvdFactors f{solver.matrixU(), solver.singularValues(), solver.matrixV()};

  for (Eigen::Index k = 0; k < f.U.cols(); ++k) {
    Eigen::Index pivot = 0;
    f.U.col(k).cwiseAbs().maxCoeff(&pivot);
    if (f.U(pivot, k) < 0.0) {
      f.U.col(k) = -f.U.col(k);
      f.V.col(k) = -f.V.col(k);
    }
  }
  return f;
}

SvdFactors truncate_factors(const SvdFactors& f, Eigen::Index r) {
  if (r < 1 || r > f.rank_bound()) {
    throw ValidationError("truncate_rank: r=" + std::to_string(r) +
                          " outside [1, " + std::to_string(f.rank_bound()) +
                          "]");
  }
  SvdFactors out = f;
  out.sigma.tail(f.rank_bound() - r).setZero();
  return out;
}

Matrix truncate_rank(const SvdFactors& f, Eigen::Index r) {
  if (r < 1 || r > f.rank_bound()) {
    throw ValidationError("truncate_rank: r=" + std::to_string(r) +
                          " outside [1, " + std::to_string(f.rank_bound()) +
                          "]");
  }
  return f.U.leftCols(r) * f.sigma.head(r).asDiagonal() *
         f.V.leftCols(r).transpose();
}

Eigen::Index numerical_rank_of_sigma(const Vector& sigma, double tol) {
  if (!(tol > 0.0)) throw ValidationError("numerical_rank: tol must be > 0");
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double cutoff = tol * sigma(0);
  Eigen::Index count = 0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) > cutoff) ++count;
  }
  return count;
}

Eigen::Index numerical_rank(const Matrix& x, double tol) {
  if (!(tol > 0.0)) throw ValidationError("numerical_rank: tol must be > 0");
  require_finite(x, "numerical_rank");
  Eigen::BDCSVD<Matrix> solver(x);
  return numerical_rank_of_sigma(solver.singularValues(), tol);
}

}  // namespace splic
