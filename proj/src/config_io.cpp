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

#include "splic/config_io.hpp"

#include <cstdio>
#include <limits>
#include <string>

#include "json.hpp"
#include "splic/error.hpp"
#include "splic/image_io.hpp"

namespace splic {

namespace {

using nlohmann::json;

double number_field(const json& value, const std::string& key) {
  if (!value.is_number()) throw ConfigError("$." + key, "expected a number");
  return value.get<double>();
}

std::int64_t integer_field(const json& value, const std::string& key) {
  if (!value.is_number_integer()) {
    throw ConfigError("$." + key, "expected an integer");
  }
  return value.get<std::int64_t>();
}

int int_field(const json& value, const std::string& key) {
  const std::int64_t v = integer_field(value, key);
  if (v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    throw ConfigError("$." + key, "integer out of range");
  }
  return static_cast<int>(v);
}

}  // namespace

SplicConfig parse_config_json(std::string_view text,
                              std::vector<std::string>* warnings) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("$", std::string("malformed JSON at byte ") +
                               std::to_string(e.byte));
  }
  if (!doc.is_object()) throw ConfigError("$", "expected a JSON object");

  SplicConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "lambda") {
      cfg.lambda = number_field(value, key);
    } else if (key == "rho") {
      cfg.rho = number_field(value, key);
    } else if (key == "mu") {
      cfg.mu = number_field(value, key);
    } else if (key == "r") {
      if (value.is_null()) {
        cfg.r.reset();
      } else {
        cfg.r = static_cast<Eigen::Index>(integer_field(value, key));
      }
    } else if (key == "epsilon") {
      cfg.epsilon = number_field(value, key);
    } else if (key == "maxiter") {
      cfg.maxiter = int_field(value, key);
    } else if (key == "inner_steps") {
      cfg.inner_steps = int_field(value, key);
    } else if (key == "anchor_fraction") {
      cfg.anchor_fraction = number_field(value, key);
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) {
        throw ConfigError("$.seed", "expected a non-negative integer");
      }
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "tv_mode") {
      if (!value.is_string()) throw ConfigError("$.tv_mode", "expected a string");
      cfg.tv_mode = parse_tv_mode(value.get<std::string>());
    } else if (key == "clamp_output") {
      if (!value.is_boolean()) {
        throw ConfigError("$.clamp_output", "expected a boolean");
      }
      cfg.clamp_output = value.get<bool>();
    } else if (warnings) {
      warnings->push_back("unknown config key \"" + key + "\" ignored");
    }
  }
  validate(cfg);
  return cfg;
}

SplicConfig read_config_json(const std::filesystem::path& path,
                             std::vector<std::string>* warnings) {
  return parse_config_json(read_file(path), warnings);
}

std::string config_to_json(const SplicConfig& cfg) {
  json doc = json::object();
  doc["lambda"] = cfg.lambda;
  doc["rho"] = cfg.rho;
  doc["mu"] = cfg.mu;
  doc["r"] = cfg.r ? json(static_cast<std::int64_t>(*cfg.r)) : json(nullptr);
  doc["epsilon"] = cfg.epsilon;
  doc["maxiter"] = cfg.maxiter;
  doc["inner_steps"] = cfg.inner_steps;
  doc["anchor_fraction"] = cfg.anchor_fraction;
  doc["seed"] = cfg.seed;
  doc["tv_mode"] = std::string(to_string(cfg.tv_mode));
  doc["clamp_output"] = cfg.clamp_output;
  return doc.dump();
}

std::string config_hash(const SplicConfig& cfg) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const char c : config_to_json(cfg)) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace splic
