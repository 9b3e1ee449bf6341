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

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "splic/config_io.hpp"
#include "splic/error.hpp"

namespace splic {
namespace {

TEST(ConfigJson, EmptyObjectGivesDefaults) {
  std::vector<std::string> warnings;
  const SplicConfig cfg = parse_config_json("{}", &warnings);
  EXPECT_EQ(cfg, SplicConfig{});
  EXPECT_EQ(cfg.lambda, 0.02);
  EXPECT_EQ(cfg.rho, 0.45);
  EXPECT_EQ(cfg.mu, 0.5);
  EXPECT_FALSE(cfg.r.has_value());
  EXPECT_TRUE(warnings.empty());
}

TEST(ConfigJson, ReadsEveryField) {
  const SplicConfig cfg = parse_config_json(R"({
    "lambda": 0.1, "rho": 0.5, "mu": 0.25, "r": 6, "epsilon": 1e-6,
    "maxiter": 70, "inner_steps": 3, "anchor_fraction": 0.6, "seed": 42,
    "tv_mode": "paper", "clamp_output": false})");
  EXPECT_EQ(cfg.lambda, 0.1);
  EXPECT_EQ(cfg.rho, 0.5);
  EXPECT_EQ(cfg.mu, 0.25);
  EXPECT_EQ(cfg.r, 6);
  EXPECT_EQ(cfg.epsilon, 1e-6);
  EXPECT_EQ(cfg.maxiter, 70);
  EXPECT_EQ(cfg.inner_steps, 3);
  EXPECT_EQ(cfg.anchor_fraction, 0.6);
  EXPECT_EQ(cfg.seed, 42u);
  EXPECT_EQ(cfg.tv_mode, TvMode::kPaper);
  EXPECT_FALSE(cfg.clamp_output);
}

TEST(ConfigJson, RhoOutOfRangeIsValidationError) {
  try {
    parse_config_json(R"({"rho": 1.5})");
    FAIL() << "rho=1.5 accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("rho"), std::string::npos);
  }
}

TEST(ConfigJson, UnknownKeysWarn) {
  std::vector<std::string> warnings;
  const SplicConfig cfg =
      parse_config_json(R"({"lamda": 0.3, "mu": 0.4})", &warnings);
  EXPECT_EQ(cfg.mu, 0.4);
  EXPECT_EQ(cfg.lambda, 0.02);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("lamda"), std::string::npos);
  EXPECT_NO_THROW(parse_config_json(R"({"extra": 1})"));
}

TEST(ConfigJson, MalformedDocumentNamesPath) {
  try {
    parse_config_json(R"({"rho": 0.4,)");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.path(), "$");
  }
  try {
    parse_config_json(R"({"mu": "fast"})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.path(), "$.mu");
  }
  try {
    parse_config_json(R"({"maxiter": 2.5})");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.path(), "$.maxiter");
  }
  EXPECT_THROW(parse_config_json("[1, 2]"), ConfigError);
  EXPECT_THROW(parse_config_json(R"({"seed": -1})"), ConfigError);
  EXPECT_THROW(parse_config_json(R"({"tv_mode": "fancy"})"), ValidationError);
}

TEST(ConfigJson, SerializationRoundTrips) {
  SplicConfig cfg;
  cfg.r = 12;
  cfg.seed = 9;
  cfg.tv_mode = TvMode::kPaper;
  EXPECT_EQ(parse_config_json(config_to_json(cfg)), cfg);
  EXPECT_EQ(parse_config_json(config_to_json(SplicConfig{})), SplicConfig{});
}

TEST(ConfigJson, HashTracksContent) {
  SplicConfig a;
  SplicConfig b;
  EXPECT_EQ(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a).size(), 16u);
  b.seed = 1;
  EXPECT_NE(config_hash(a), config_hash(b));
}

TEST(ConfigJson, ReadsFromFile) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("splic_cfg_" + std::to_string(::getpid()) + ".json");
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    ASSERT_NE(f, nullptr);
    std::fputs(R"({"lambda": 0})", f);
    std::fclose(f);
  }
  EXPECT_EQ(read_config_json(path).lambda, 0.0);
  std::filesystem::remove(path);
  EXPECT_THROW(read_config_json(path), IoError);
}

}  // namespace
}  // namespace splic
