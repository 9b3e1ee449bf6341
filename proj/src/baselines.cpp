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

#include "splic/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "splic/error.hpp"

namespace splic {

Matrix soft_threshold_singular(const SvdFactors& f, double tau) {
  if (!(tau >= 0.0)) throw ValidationError("soft threshold tau must be >= 0");
  const Vector shrunk = (f.sigma.array() - tau).max(0.0).matrix();
  return f.U * shrunk.asDiagonal() * f.V.transpose();
}

namespace {

void require_mask(const Matrix& x, const BinaryMask& mask, const char* what) {
  require_finite(x, what);
  if (!mask.same_shape(x)) {
    throw ValidationError(std::string(what) + ": mask shape mismatch");
  }
  if (mask.count() == 0) {
    throw ValidationError(std::string(what) + ": mask selects no entries");
  }
}

}  // namespace

double default_soft_impute_tau(const Matrix& x, const BinaryMask& mask,
                               double fraction) {
  require_mask(x, mask, "soft_impute");
  const Matrix observed = project(Matrix::Zero(x.rows(), x.cols()), x, mask);
  return fraction * svd(observed).sigma(0);
}

BaselineResult soft_impute(const Matrix& x, const BinaryMask& mask, double tau,
                           int iters, double tol,
                           const SoftImputeObserver& observer) {
  require_mask(x, mask, "soft_impute");
  if (!(tau >= 0.0)) throw ValidationError("soft_impute: tau must be >= 0");
  if (iters < 1) throw ValidationError("soft_impute: iters must be >= 1");

  BaselineResult out;
  Matrix z = Matrix::Zero(x.rows(), x.cols());
  for (int k = 1; k <= iters; ++k) {
    Matrix next = soft_threshold_singular(svd(project(z, x, mask)), tau);
    const double rel = relative_change(next, z);
    z = std::move(next);
    out.iterations = k;
    if (observer) observer(k, z);
    if (rel < tol) {
      out.converged = true;
      break;
    }
  }
  out.completed = std::move(z);
  return out;
}

BaselineResult usvt(const Matrix& x, const BinaryMask& mask, double eta) {
  require_mask(x, mask, "usvt");
  if (!(eta >= 0.0)) throw ValidationError("usvt: eta must be >= 0");

  const double p_hat = mask.fraction();
  const Matrix scaled =
      project(Matrix::Zero(x.rows(), x.cols()), x, mask) / p_hat;
  const double dim = static_cast<double>(std::max(x.rows(), x.cols()));
  const double threshold = (1.0 + eta) * std::sqrt(dim * p_hat);

  SvdFactors f = svd(scaled);
  for (Eigen::Index k = 0; k < f.sigma.size(); ++k) {
    if (f.sigma(k) < threshold) f.sigma(k) = 0.0;
  }

  BaselineResult out;
  out.completed = f.reconstruct().cwiseMax(0.0).cwiseMin(1.0);
  out.iterations = 1;
  out.converged = true;
  return out;
}

CompletionResult srf_only(const Matrix& x, const BinaryMask& mask,
                          const SplicConfig& cfg) {
  SplicConfig no_tv = cfg;
  no_tv.lambda = 0.0;
  return splic_complete(x, mask, no_tv);
}

}  // namespace splic
