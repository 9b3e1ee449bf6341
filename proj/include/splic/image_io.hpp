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

#ifndef SPLIC_IMAGE_IO_HPP_
#define SPLIC_IMAGE_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "splic/linalg.hpp"
#include "splic/metrics.hpp"
#include "splic/sampling.hpp"
#include "splic/solver.hpp"

namespace splic {

enum class ImageFormat {
  kPgmAscii,   // P2
  kPpmAscii,   // P3
  kPgmBinary,  // P5
  kPpmBinary,  // P6
};

std::string_view magic(ImageFormat format);
int channel_count(ImageFormat format);
// Same encoding (ASCII or binary) with the channel count of `channels`.
ImageFormat format_for_channels(ImageFormat like, std::size_t channels);

// Decoded netpbm image. Every plane is height x width with values in
// [0, 1] (sample / maxval). PGM gives one plane, PPM gives R, G, B.
struct Image {
  ImageFormat format = ImageFormat::kPgmBinary;
  int maxval = 255;
  std::vector<Matrix> channels;

  Eigen::Index height() const { return channels.empty() ? 0 : channels[0].rows(); }
  Eigen::Index width() const { return channels.empty() ? 0 : channels[0].cols(); }
};

// Accepts P2, P3, P5 and P6 with maxval in [1, 65535]; '#' comments are
// allowed wherever header whitespace is. Header problems throw ParseError
// with the byte offset, a short raster throws TruncatedPayloadError. Binary
// samples wider than a byte are big-endian. Bytes after the raster are
// ignored.
Image parse_image(std::string_view bytes);
Image read_image(const std::filesystem::path& path);

// Samples are round(v * maxval) with halves rounded up. Every value must be
// within [0, 1]; clamp beforehand. `comment` lines are emitted as "# ..."
// after the magic.
std::string encode_image(const std::vector<Matrix>& channels,
                         ImageFormat format, int maxval = 255,
                         const std::vector<std::string>& comments = {});
void write_image(const std::vector<Matrix>& channels,
                 const std::filesystem::path& path, ImageFormat format,
                 int maxval = 255,
                 const std::vector<std::string>& comments = {});
void write_image(const Matrix& plane, const std::filesystem::path& path,
                 ImageFormat format = ImageFormat::kPgmBinary,
                 int maxval = 255,
                 const std::vector<std::string>& comments = {});

// Masks are PGM files holding only 0 and maxval.
BinaryMask read_mask(const std::filesystem::path& path);
void write_mask(const BinaryMask& mask, const std::filesystem::path& path);

// "t,delta,rel_change,srf,tv" followed by one line per record.
std::string format_trace_csv(const ConvergenceTrace& trace);
void write_trace_csv(const ConvergenceTrace& trace,
                     const std::filesystem::path& path);

// "method,psnr_db,rank,iters,seconds"; infinite PSNR prints as "inf".
std::string format_comparison_csv(const ComparisonRecord& record);

// Shortest decimal that round-trips; +/-inf and nan spelled out.
std::string format_number(double value);

// Writes to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace splic

#endif  // SPLIC_IMAGE_IO_HPP_
