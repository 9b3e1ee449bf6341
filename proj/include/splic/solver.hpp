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

#ifndef SPLIC_SOLVER_HPP_
#define SPLIC_SOLVER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "splic/linalg.hpp"
#include "splic/sampling.hpp"
#include "splic/tv.hpp"

namespace splic {

// Hyperparameters of the progressive smoothed-rank completion.
// Field names match the keys accepted in JSON config files.
struct SplicConfig {
  double lambda = 0.02;  // TV weight, >= 0
  double rho = 0.45;     // delta decay per block, in (0, 1)
  double mu = 0.5;       // gradient step, > 0
  // Target rank; unset means round(min(m, n) / 4), at least 1.
  std::optional<Eigen::Index> r;
  double epsilon = 1e-4;  // stop once relative_change <= epsilon
  int maxiter = 210;      // hard cap on total gradient steps
  int inner_steps = 7;    // steps per delta block
  double anchor_fraction = 0.5;
  std::uint64_t seed = 0;
  TvMode tv_mode = TvMode::kExact;
  bool clamp_output = true;

  friend bool operator==(const SplicConfig&, const SplicConfig&) = default;
};

// Checks every constraint that does not depend on the image size.
void validate(const SplicConfig& cfg);
// Target rank for an m x n image; throws if it falls outside [1, min(m, n)].
Eigen::Index resolve_rank(const SplicConfig& cfg, Eigen::Index m,
                          Eigen::Index n);

struct TraceRecord {
  int t;              // 1-based step index within the pass
  double delta;       // smoothing width used for this step
  double rel_change;  // ||X_{t} - X_{t-1}||_F / (m n)
  double srf;         // smoothed rank of the truncated iterate
  double tv;          // TV penalty of the truncated iterate
};
using ConvergenceTrace = std::vector<TraceRecord>;

struct CompletionResult {
  // Final projected iterate: anchors hold their input values exactly.
  Matrix completed;
  // Rank-r truncation of the final iterate (never clamped).
  Matrix low_rank;
  ConvergenceTrace trace;
  int iterations = 0;
  bool converged = false;
  // Steps taken by each pass; one entry for a single completion.
  std::vector<int> pass_lengths;
};

// Snapshot handed to an observer after every gradient step.
struct IterationState {
  int t;
  double delta;
  const Matrix& truncated;  // U S_r V^T, where the gradients are taken
  const Matrix& stepped;    // after the gradient step, before projection
  const Matrix& projected;  // the new iterate
};
using IterationObserver = std::function<void(const IterationState&)>;

// Anchors (mask set) take x, everything else takes x_tilde, bit-exact.
Matrix project(const Matrix& x_tilde, const Matrix& x, const BinaryMask& mask);

// Frobenius norm of the difference divided by m * n.
double relative_change(const Matrix& x_new, const Matrix& x_old);

// Completes the unanchored pixels of x. Starts from x masked to its anchors,
// with delta equal to the largest singular value of that start. Each block
// runs cfg.inner_steps steps of: SVD, hard truncation to rank r, one
// gradient step on smoothed rank + lambda * TV, projection onto the anchors.
// delta shrinks by rho between blocks. Stops when the last step's relative
// change is <= epsilon (checked after each block) or after maxiter steps.
// Throws ValidationError on shape/config errors, a mask without anchors, or
// an all-zero masked start.
CompletionResult splic_complete(const Matrix& x, const BinaryMask& mask,
                                const SplicConfig& cfg,
                                const IterationObserver& observer = {});

// Two passes: complete the targets of `mask`, then swap anchor and target
// roles and complete again from the first pass's output, so every pixel is
// re-estimated exactly once. The delta schedule restarts in pass two.
CompletionResult splic_alternated(const Matrix& x, const BinaryMask& mask,
                                  const SplicConfig& cfg,
                                  const IterationObserver& observer = {});
// Uses generate_mask(m, n, cfg.anchor_fraction, cfg.seed) for pass one.
CompletionResult splic_alternated(const Matrix& x, const SplicConfig& cfg);

// Channel-wise drivers; every plane shares the mask and config.
std::vector<CompletionResult> splic_complete_channels(
    const std::vector<Matrix>& channels, const BinaryMask& mask,
    const SplicConfig& cfg);
std::vector<CompletionResult> splic_alternated_channels(
    const std::vector<Matrix>& channels, const BinaryMask& mask,
    const SplicConfig& cfg);

}  // namespace splic

#endif  // SPLIC_SOLVER_HPP_
