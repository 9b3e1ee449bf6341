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

#ifndef SPLIC_TV_HPP_
#define SPLIC_TV_HPP_

#include <string_view>

#include "splic/linalg.hpp"

namespace splic {

// Which derivative of the total-variation penalty the solver uses.
//   kExact - true gradient of tv_value (entries sum to zero).
//   kPaper - the published closed form: forward-neighbour terms only, corner 0.
enum class TvMode { kExact, kPaper };

std::string_view to_string(TvMode mode);
// Accepts "exact" or "paper"; throws ValidationError otherwise.
TvMode parse_tv_mode(std::string_view text);

// Half-squared forward differences over every vertical and horizontal
// neighbour pair. Zero iff x is constant. Requires at least 2x2.
double tv_value(const Matrix& x);

Matrix tv_gradient_exact(const Matrix& x);
Matrix tv_gradient_paper(const Matrix& x);
Matrix tv_gradient(const Matrix& x, TvMode mode);

}  // namespace splic

#endif  // SPLIC_TV_HPP_
