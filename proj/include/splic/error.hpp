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

#ifndef SPLIC_ERROR_HPP_
#define SPLIC_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace splic {

// Bad argument, shape mismatch or config value outside its allowed range.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed image header, magic, dimensions or sample value.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// The header was valid but the pixel payload ended early.
class TruncatedPayloadError : public std::runtime_error {
 public:
  TruncatedPayloadError(std::size_t expected, std::size_t available)
      : std::runtime_error("truncated payload: expected " +
                           std::to_string(expected) + " samples, found " +
                           std::to_string(available)),
        expected_(expected),
        available_(available) {}

  std::size_t expected() const { return expected_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t expected_;
  std::size_t available_;
};

// Malformed JSON config; `path` is a JSON-pointer-like key path ("$.rho").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace splic

#endif  // SPLIC_ERROR_HPP_
