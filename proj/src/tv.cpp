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

#include "splic/tv.hpp"

#include <string>

#include "splic/error.hpp"

namespace splic {

std::string_view to_string(TvMode mode) {
  return mode == TvMode::kPaper ? "paper" : "exact";
}

TvMode parse_tv_mode(std::string_view text) {
  if (text == "exact") return TvMode::kExact;
  if (text == "paper") return TvMode::kPaper;
  throw ValidationError("tv_mode must be \"exact\" or \"paper\", got \"" +
                        std::string(text) + "\"");
}

double tv_value(const Matrix& x) {
  require_solver_shape(x, "tv_value");
  const Eigen::Index m = x.rows();
  const Eigen::Index n = x.cols();
  const double vertical =
      (x.topRows(m - 1) - x.bottomRows(m - 1)).squaredNorm();
  const double horizontal =
      (x.leftCols(n - 1) - x.rightCols(n - 1)).squaredNorm();
  return 0.5 * (vertical + horizontal);
}

Matrix tv_gradient_exact(const Matrix& x) {
  require_solver_shape(x, "tv_gradient_exact");
  const Eigen::Index m = x.rows();
  const Eigen::Index n = x.cols();
  Matrix grad = Matrix::Zero(m, n);

  const Matrix dv = x.topRows(m - 1) - x.bottomRows(m - 1);
  grad.topRows(m - 1) += dv;
  grad.bottomRows(m - 1) -= dv;

  const Matrix dh = x.leftCols(n - 1) - x.rightCols(n - 1);
  grad.leftCols(n - 1) += dh;
  grad.rightCols(n - 1) -= dh;
  return grad;
}

Matrix tv_gradient_paper(const Matrix& x) {
  require_solver_shape(x, "tv_gradient_paper");
  const Eigen::Index m = x.rows();
  const Eigen::Index n = x.cols();
  Matrix grad(m, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) {
      const bool last_row = i == m - 1;
      const bool last_col = j == n - 1;
      if (last_row && last_col) {
        grad(i, j) = 0.0;
      } else if (last_row) {
        grad(i, j) = x(i, j) - x(i, j + 1);
      } else if (last_col) {
        grad(i, j) = x(i, j) - x(i + 1, j);
      } else {
        grad(i, j) = 2.0 * x(i, j) - x(i + 1, j) - x(i, j + 1);
      }
    }
  }
  return grad;
}

Matrix tv_gradient(const Matrix& x, TvMode mode) {
  return mode == TvMode::kPaper ? tv_gradient_paper(x) : tv_gradient_exact(x);
}

}  // namespace splic
