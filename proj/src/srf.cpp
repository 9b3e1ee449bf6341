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

#include "splic/srf.hpp"

#include <cmath>
#include <string>

#include "splic/error.hpp"

namespace splic {

Smoothness::Smoothness(double delta) : delta_(delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw ValidationError("delta must be finite and > 0, got " +
                          std::to_string(delta));
  }
}

double srf_value_of_sigma(const Vector& sigma, Smoothness delta) {
  double kept = 0.0;
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    const double z = sigma(k) / delta.value();
    kept += std::exp(-0.5 * z * z);
  }
  return static_cast<double>(sigma.size()) - kept;
}

double srf_value(const Matrix& x, Smoothness delta) {
  require_finite(x, "srf_value");
  Eigen::BDCSVD<Matrix> solver(x);
  return srf_value_of_sigma(solver.singularValues(), delta);
}

Matrix srf_gradient(const SvdFactors& f, Smoothness delta) {
  // Scaled by z = sigma / delta so tiny deltas cannot produce inf * 0.
  const double d = delta.value();
  Vector weight(f.sigma.size());
  for (Eigen::Index k = 0; k < f.sigma.size(); ++k) {
    const double z = f.sigma(k) / d;
    const double decay = std::exp(-0.5 * z * z);
    weight(k) = decay == 0.0 ? 0.0 : z * decay / d;
  }
  return f.U * weight.asDiagonal() * f.V.transpose();
}

}  // namespace splic
