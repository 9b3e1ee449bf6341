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

#ifndef SPLIC_METRICS_HPP_
#define SPLIC_METRICS_HPP_

#include <string>
#include <vector>

#include "splic/baselines.hpp"
#include "splic/linalg.hpp"
#include "splic/sampling.hpp"
#include "splic/solver.hpp"

namespace splic {

// 10 log10(peak^2 / MSE). Identical inputs give +infinity, which serializes
// as "inf".
double psnr(const Matrix& a, const Matrix& b, double peak = 1.0);
// MSE pooled over every channel.
double psnr(const std::vector<Matrix>& a, const std::vector<Matrix>& b,
            double peak = 1.0);

double nuclear_norm(const Matrix& x);

struct MethodScore {
  std::string method;
  double psnr_db = 0.0;
  Eigen::Index rank = 0;  // numerical rank (tol 1e-6) of the unclipped output
  int iters = 0;
  double seconds = 0.0;
};

// One row per method, in the order splic, srf, soft-impute, usvt.
struct ComparisonRecord {
  std::vector<MethodScore> rows;
};

inline constexpr double kComparisonRankTol = 1e-6;

// Runs SPLIC, SRF-only, Soft-Impute and USVT on (corrupt, mask) and scores
// each output (clipped to [0, 1]) against `clean`. Channels share the mask;
// ranks report the maximum over channels and iterations the sum.
ComparisonRecord compare_methods(const std::vector<Matrix>& clean,
                                 const std::vector<Matrix>& corrupt,
                                 const BinaryMask& mask,
                                 const SplicConfig& cfg,
                                 const BaselineOptions& options = {});
ComparisonRecord compare_methods(const Matrix& clean, const Matrix& corrupt,
                                 const BinaryMask& mask,
                                 const SplicConfig& cfg,
                                 const BaselineOptions& options = {});

}  // namespace splic

#endif  // SPLIC_METRICS_HPP_
