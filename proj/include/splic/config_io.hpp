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

#ifndef SPLIC_CONFIG_IO_HPP_
#define SPLIC_CONFIG_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "splic/solver.hpp"

namespace splic {

// Reads a JSON object whose keys are SplicConfig field names. Missing keys
// keep their defaults; unknown keys are reported in `warnings` and otherwise
// ignored. Malformed JSON or a wrongly-typed value throws ConfigError naming
// the key path; values outside their allowed range throw ValidationError.
SplicConfig parse_config_json(std::string_view text,
                              std::vector<std::string>* warnings = nullptr);
SplicConfig read_config_json(const std::filesystem::path& path,
                             std::vector<std::string>* warnings = nullptr);

// Canonical single-line JSON with every field; unset r is null.
std::string config_to_json(const SplicConfig& cfg);

// 64-bit FNV-1a of config_to_json(cfg), as 16 lowercase hex digits.
std::string config_hash(const SplicConfig& cfg);

}  // namespace splic

#endif  // SPLIC_CONFIG_IO_HPP_
