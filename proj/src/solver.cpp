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

#include "splic/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "splic/error.hpp"
#include "splic/srf.hpp"

namespace splic {

void validate(const SplicConfig& cfg) {
  if (!(cfg.lambda >= 0.0) || !std::isfinite(cfg.lambda)) {
    throw ValidationError("lambda must be finite and >= 0");
  }
  if (!(cfg.rho > 0.0 && cfg.rho < 1.0)) {
    throw ValidationError("rho must lie in (0, 1), got " +
                          std::to_string(cfg.rho));
  }
  if (!(cfg.mu > 0.0) || !std::isfinite(cfg.mu)) {
    throw ValidationError("mu must be finite and > 0");
  }
  if (cfg.r && *cfg.r < 1) {
    throw ValidationError("r must be >= 1, got " + std::to_string(*cfg.r));
  }
  if (!(cfg.epsilon > 0.0)) throw ValidationError("epsilon must be > 0");
  if (cfg.maxiter < 1) throw ValidationError("maxiter must be >= 1");
  if (cfg.inner_steps < 1) throw ValidationError("inner_steps must be >= 1");
  if (!(cfg.anchor_fraction > 0.0 && cfg.anchor_fraction <= 1.0)) {
    throw ValidationError("anchor_fraction must lie in (0, 1]");
  }
}

Eigen::Index resolve_rank(const SplicConfig& cfg, Eigen::Index m,
                          Eigen::Index n) {
  const Eigen::Index l = std::min(m, n);
  const Eigen::Index r =
      cfg.r ? *cfg.r
            : std::max<Eigen::Index>(
                  1, std::lround(static_cast<double>(l) / 4.0));
  if (r < 1 || r > l) {
    throw ValidationError("r=" + std::to_string(r) + " outside [1, " +
                          std::to_string(l) + "]");
  }
  return r;
}

Matrix project(const Matrix& x_tilde, const Matrix& x,
               const BinaryMask& mask) {
  require_same_shape(x_tilde, x, "project");
  if (!mask.same_shape(x)) throw ValidationError("project: mask shape mismatch");
  Matrix out(x.rows(), x.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      out(i, j) = mask(i, j) ? x(i, j) : x_tilde(i, j);
    }
  }
  return out;
}

double relative_change(const Matrix& x_new, const Matrix& x_old) {
  require_same_shape(x_new, x_old, "relative_change");
  return (x_new - x_old).norm() / static_cast<double>(x_new.size());
}

namespace {

Matrix masked(const Matrix& x, const BinaryMask& mask) {
  return project(Matrix::Zero(x.rows(), x.cols()), x, mask);
}

void clamp_targets(Matrix& x, const BinaryMask& mask) {
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      if (!mask(i, j)) x(i, j) = std::clamp(x(i, j), 0.0, 1.0);
    }
  }
}

}  // namespace

CompletionResult splic_complete(const Matrix& x, const BinaryMask& mask,
                                const SplicConfig& cfg,
                                const IterationObserver& observer) {
  validate(cfg);
  require_solver_shape(x, "splic_complete");
  require_finite(x, "splic_complete");
  if (!mask.same_shape(x)) {
    throw ValidationError("splic_complete: mask shape mismatch");
  }
  if (mask.count() == 0) {
    throw ValidationError("splic_complete: mask selects no anchor pixels");
  }
  const Eigen::Index rank = resolve_rank(cfg, x.rows(), x.cols());

  Matrix current = masked(x, mask);
  double delta = svd(current).sigma(0);
  if (!(delta > 0.0)) {
    throw ValidationError(
        "splic_complete: masked input is all zeros, initial delta would be 0");
  }

  CompletionResult result;
  double rel = std::numeric_limits<double>::infinity();
  int t = 0;
  while (rel > cfg.epsilon && t < cfg.maxiter) {
    const Smoothness smooth(delta);
    for (int step = 0; step < cfg.inner_steps && t < cfg.maxiter; ++step) {
      const SvdFactors factors = truncate_factors(svd(current), rank);
      const Matrix truncated = truncate_rank(factors, rank);
      const Matrix stepped =
          truncated - cfg.mu * (srf_gradient(factors, smooth) +
                                cfg.lambda * tv_gradient(truncated, cfg.tv_mode));
      Matrix next = project(stepped, x, mask);
      rel = relative_change(next, current);
      ++t;
      result.trace.push_back({t, delta, rel, srf_value_of_sigma(factors.sigma, smooth),
                              tv_value(truncated)});
      if (observer) observer({t, delta, truncated, stepped, next});
      current = std::move(next);
    }
    // Past ~1e-308 the product underflows to 0; hold delta there instead.
    if (delta * cfg.rho > 0.0) delta *= cfg.rho;
  }

  result.low_rank = truncate_rank(svd(current), rank);
  if (cfg.clamp_output) clamp_targets(current, mask);
  result.completed = std::move(current);
  result.iterations = t;
  result.converged = rel <= cfg.epsilon;
  result.pass_lengths = {t};
  return result;
}

CompletionResult splic_alternated(const Matrix& x, const BinaryMask& mask,
                                  const SplicConfig& cfg,
                                  const IterationObserver& observer) {
  CompletionResult first = splic_complete(x, mask, cfg, observer);
  CompletionResult second =
      splic_complete(first.completed, complement(mask), cfg, observer);

  CompletionResult out;
  out.completed = std::move(second.completed);
  out.low_rank = std::move(second.low_rank);
  out.trace = std::move(first.trace);
  out.trace.insert(out.trace.end(), second.trace.begin(), second.trace.end());
  out.iterations = first.iterations + second.iterations;
  out.converged = first.converged && second.converged;
  out.pass_lengths = {first.iterations, second.iterations};
  return out;
}

CompletionResult splic_alternated(const Matrix& x, const SplicConfig& cfg) {
  validate(cfg);
  const BinaryMask mask =
      generate_mask(x.rows(), x.cols(), cfg.anchor_fraction, cfg.seed);
  return splic_alternated(x, mask, cfg);
}

std::vector<CompletionResult> splic_complete_channels(
    const std::vector<Matrix>& channels, const BinaryMask& mask,
    const SplicConfig& cfg) {
  std::vector<CompletionResult> out;
  out.reserve(channels.size());
  for (const Matrix& plane : channels) {
    out.push_back(splic_complete(plane, mask, cfg));
  }
  return out;
}

std::vector<CompletionResult> splic_alternated_channels(
    const std::vector<Matrix>& channels, const BinaryMask& mask,
    const SplicConfig& cfg) {
  std::vector<CompletionResult> out;
  out.reserve(channels.size());
  for (const Matrix& plane : channels) {
    out.push_back(splic_alternated(plane, mask, cfg));
  }
  return out;
}

}  // namespace splic
