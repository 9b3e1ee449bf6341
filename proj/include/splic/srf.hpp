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

#ifndef SPLIC_SRF_HPP_
#define SPLIC_SRF_HPP_

#include "splic/linalg.hpp"

namespace splic {

// Gaussian smoothing width applied to the singular values. Always > 0.
class Smoothness {
 public:
  explicit Smoothness(double delta);

  double value() const { return delta_; }

 private:
  double delta_;
};

// Smoothed rank  F(X) = l - sum_k exp(-sigma_k^2 / (2 delta^2)).
// Lies in [0, l] and tends to rank(X) as delta -> 0.
double srf_value(const Matrix& x, Smoothness delta);
double srf_value_of_sigma(const Vector& sigma, Smoothness delta);

// U * diag(sigma_k / delta^2 * exp(-sigma_k^2 / (2 delta^2))) * V^T, taken
// from already-computed factors. At repeated singular values this is the
// formula applied verbatim.
Matrix srf_gradient(const SvdFactors& f, Smoothness delta);

}  // namespace splic

#endif  // SPLIC_SRF_HPP_
