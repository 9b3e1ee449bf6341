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

#ifndef SPLIC_BASELINES_HPP_
#define SPLIC_BASELINES_HPP_

#include <functional>

#include "splic/linalg.hpp"
#include "splic/sampling.hpp"
#include "splic/solver.hpp"

namespace splic {

// U * diag(max(sigma_k - tau, 0)) * V^T, the proximal map of tau * ||.||_*.
Matrix soft_threshold_singular(const SvdFactors& f, double tau);

struct BaselineResult {
  Matrix completed;
  int iterations = 0;
  bool converged = false;
};

// Called with (iteration, iterate) after every Soft-Impute update.
using SoftImputeObserver = std::function<void(int, const Matrix&)>;

// Soft-Impute fixed point Z <- SVT_tau(M.x + (1 - M).Z), starting from Z = 0.
// Stops when relative_change(Z_new, Z) < tol or after `iters` updates.
// Observed entries of the result are not forced back to x.
BaselineResult soft_impute(const Matrix& x, const BinaryMask& mask, double tau,
                           int iters, double tol,
                           const SoftImputeObserver& observer = {});

// One-shot USVT: hard-threshold the singular values of (M.x) / p_hat at
// (1 + eta) * sqrt(max(m, n) * p_hat), p_hat = observed fraction, then clip
// the reconstruction to [0, 1].
BaselineResult usvt(const Matrix& x, const BinaryMask& mask, double eta);

// The SPLIC driver with the TV weight forced to zero.
CompletionResult srf_only(const Matrix& x, const BinaryMask& mask,
                          const SplicConfig& cfg);

struct BaselineOptions {
  double soft_tau_fraction = 0.05;  // tau = fraction * sigma_1(M.x)
  int soft_iters = 500;
  double soft_tol = 1e-7;
  double usvt_eta = 0.01;
};

// tau = fraction * sigma_1(M.x).
double default_soft_impute_tau(const Matrix& x, const BinaryMask& mask,
                               double fraction = 0.05);

}  // namespace splic

#endif  // SPLIC_BASELINES_HPP_
