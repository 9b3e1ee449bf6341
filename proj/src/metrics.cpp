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

#include "splic/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include "splic/error.hpp"

namespace splic {

double psnr(const std::vector<Matrix>& a, const std::vector<Matrix>& b,
            double peak) {
  if (!(peak > 0.0)) throw ValidationError("psnr: peak must be > 0");
  if (a.size() != b.size() || a.empty()) {
    throw ValidationError("psnr: channel count mismatch");
  }
  double sum_sq = 0.0;
  double count = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    require_same_shape(a[c], b[c], "psnr");
    sum_sq += (a[c] - b[c]).squaredNorm();
    count += static_cast<double>(a[c].size());
  }
  const double mse = sum_sq / count;
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak * peak / mse);
}

double psnr(const Matrix& a, const Matrix& b, double peak) {
  return psnr(std::vector<Matrix>{a}, std::vector<Matrix>{b}, peak);
}

double nuclear_norm(const Matrix& x) {
  require_finite(x, "nuclear_norm");
  if (x.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> solver(x);
  return solver.singularValues().sum();
}

namespace {

using PlaneMethod = std::function<std::pair<Matrix, int>(const Matrix&)>;

MethodScore score(const std::string& name, const std::vector<Matrix>& clean,
                  const std::vector<Matrix>& corrupt, const PlaneMethod& run) {
  MethodScore row;
  row.method = name;
  std::vector<Matrix> outputs;
  const auto start = std::chrono::steady_clock::now();
  for (const Matrix& plane : corrupt) {
    auto [out, iters] = run(plane);
    row.iters += iters;
    row.rank = std::max(row.rank, numerical_rank(out, kComparisonRankTol));
    outputs.push_back(out.cwiseMax(0.0).cwiseMin(1.0));
  }
  row.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  row.psnr_db = psnr(outputs, clean);
  return row;
}

}  // namespace

ComparisonRecord compare_methods(const std::vector<Matrix>& clean,
                                 const std::vector<Matrix>& corrupt,
                                 const BinaryMask& mask,
                                 const SplicConfig& cfg,
                                 const BaselineOptions& options) {
  if (clean.size() != corrupt.size() || clean.empty()) {
    throw ValidationError("compare_methods: channel count mismatch");
  }
  for (std::size_t c = 0; c < clean.size(); ++c) {
    require_same_shape(clean[c], corrupt[c], "compare_methods");
  }

  ComparisonRecord record;
  record.rows.push_back(score("splic", clean, corrupt, [&](const Matrix& x) {
    CompletionResult r = splic_complete(x, mask, cfg);
    return std::pair{std::move(r.completed), r.iterations};
  }));
  record.rows.push_back(score("srf", clean, corrupt, [&](const Matrix& x) {
    CompletionResult r = srf_only(x, mask, cfg);
    return std::pair{std::move(r.completed), r.iterations};
  }));
  record.rows.push_back(
      score("soft-impute", clean, corrupt, [&](const Matrix& x) {
        const double tau =
            default_soft_impute_tau(x, mask, options.soft_tau_fraction);
        BaselineResult r = soft_impute(x, mask, tau, options.soft_iters,
                                       options.soft_tol);
        return std::pair{std::move(r.completed), r.iterations};
      }));
  record.rows.push_back(score("usvt", clean, corrupt, [&](const Matrix& x) {
    BaselineResult r = usvt(x, mask, options.usvt_eta);
    return std::pair{std::move(r.completed), r.iterations};
  }));
  return record;
}

ComparisonRecord compare_methods(const Matrix& clean, const Matrix& corrupt,
                                 const BinaryMask& mask,
                                 const SplicConfig& cfg,
                                 const BaselineOptions& options) {
  return compare_methods(std::vector<Matrix>{clean},
                         std::vector<Matrix>{corrupt}, mask, cfg, options);
}

}  // namespace splic
