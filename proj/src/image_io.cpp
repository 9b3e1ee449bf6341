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

#include "splic/image_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <system_error>

#include "splic/error.hpp"

namespace splic {

std::string_view magic(ImageFormat format) {
  switch (format) {
    case ImageFormat::kPgmAscii: return "P2";
    case ImageFormat::kPpmAscii: return "P3";
    case ImageFormat::kPgmBinary: return "P5";
    case ImageFormat::kPpmBinary: return "P6";
  }
  return "P5";
}

int channel_count(ImageFormat format) {
  return format == ImageFormat::kPpmAscii || format == ImageFormat::kPpmBinary
             ? 3
             : 1;
}

ImageFormat format_for_channels(ImageFormat like, std::size_t channels) {
  const bool ascii =
      like == ImageFormat::kPgmAscii || like == ImageFormat::kPpmAscii;
  if (channels == 3) {
    return ascii ? ImageFormat::kPpmAscii : ImageFormat::kPpmBinary;
  }
  return ascii ? ImageFormat::kPgmAscii : ImageFormat::kPgmBinary;
}

namespace {

constexpr std::uint64_t kMaxSide = 1u << 20;

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Cursor {
 public:
  explicit Cursor(std::string_view bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  bool done() const { return pos_ >= bytes_.size(); }
  unsigned char byte_at(std::size_t i) const {
    return static_cast<unsigned char>(bytes_[i]);
  }
  void advance(std::size_t n) { pos_ += n; }

  // Whitespace and '#'-to-end-of-line comments.
  void skip_separators() {
    while (!done()) {
      const char c = bytes_[pos_];
      if (is_space(c)) {
        ++pos_;
      } else if (c == '#') {
        while (!done() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  // Unsigned decimal. Returns false at end of input; throws on anything else
  // that is not a digit run.
  bool read_unsigned(std::uint64_t limit, const char* what,
                     std::uint64_t* value) {
    skip_separators();
    if (done()) return false;
    const std::size_t start = pos_;
    if (!is_digit(bytes_[pos_])) {
      throw ParseError(start, std::string("expected ") + what);
    }
    std::uint64_t v = 0;
    while (!done() && is_digit(bytes_[pos_])) {
      v = v * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
      if (v > limit) {
        throw ParseError(start, std::string(what) + " exceeds " +
                                    std::to_string(limit));
      }
      ++pos_;
    }
    if (!done() && !is_space(bytes_[pos_]) && bytes_[pos_] != '#') {
      throw ParseError(pos_, std::string("unexpected byte after ") + what);
    }
    *value = v;
    return true;
  }

  std::uint64_t header_field(std::uint64_t limit, const char* what) {
    std::uint64_t v = 0;
    if (!read_unsigned(limit, what, &v)) {
      throw ParseError(pos_, std::string("header ends before ") + what);
    }
    return v;
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

ImageFormat format_from_magic(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P') {
    throw ParseError(0, "missing netpbm magic");
  }
  switch (bytes[1]) {
    case '2': return ImageFormat::kPgmAscii;
    case '3': return ImageFormat::kPpmAscii;
    case '5': return ImageFormat::kPgmBinary;
    case '6': return ImageFormat::kPpmBinary;
    default:
      throw ParseError(1, std::string("unsupported magic P") + bytes[1]);
  }
}

}  // namespace

Image parse_image(std::string_view bytes) {
  Image image;
  image.format = format_from_magic(bytes);
  Cursor cur(bytes);
  cur.advance(2);
  if (!cur.done() && !is_space(bytes[2]) && bytes[2] != '#') {
    throw ParseError(2, "magic must be followed by whitespace");
  }

  const std::uint64_t width = cur.header_field(kMaxSide, "width");
  if (width == 0) throw ParseError(cur.offset(), "width must be positive");
  const std::uint64_t height = cur.header_field(kMaxSide, "height");
  if (height == 0) throw ParseError(cur.offset(), "height must be positive");
  const std::uint64_t maxval = cur.header_field(65535, "maxval");
  if (maxval == 0) throw ParseError(cur.offset(), "maxval must be positive");
  image.maxval = static_cast<int>(maxval);

  const int channels = channel_count(image.format);
  const std::uint64_t samples = width * height * channels;
  const bool binary = image.format == ImageFormat::kPgmBinary ||
                      image.format == ImageFormat::kPpmBinary;
  const std::size_t sample_bytes = maxval > 255 ? 2 : 1;

  if (binary) {
    if (cur.done()) throw TruncatedPayloadError(samples, 0);
    // Exactly one whitespace byte separates maxval from the raster.
    if (!is_space(bytes[cur.offset()])) {
      throw ParseError(cur.offset(), "expected whitespace before raster");
    }
    cur.advance(1);
    if (cur.remaining() < samples * sample_bytes) {
      throw TruncatedPayloadError(samples, cur.remaining() / sample_bytes);
    }
  } else if (cur.remaining() < samples) {
    // Each ASCII sample needs at least one byte.
    throw TruncatedPayloadError(samples, 0);
  }

  const auto h = static_cast<Eigen::Index>(height);
  const auto w = static_cast<Eigen::Index>(width);
  image.channels.assign(channels, Matrix(h, w));
  const double scale = 1.0 / static_cast<double>(maxval);

  std::uint64_t k = 0;
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < w; ++j) {
      for (int c = 0; c < channels; ++c, ++k) {
        std::uint64_t v = 0;
        const std::size_t at = cur.offset();
        if (binary) {
          v = cur.byte_at(at);
          if (sample_bytes == 2) v = (v << 8) | cur.byte_at(at + 1);
          cur.advance(sample_bytes);
        } else if (!cur.read_unsigned(std::numeric_limits<std::uint32_t>::max(),
                                      "sample", &v)) {
          throw TruncatedPayloadError(samples, k);
        }
        if (v > maxval) {
          throw ParseError(at, "sample " + std::to_string(v) +
                                   " exceeds maxval " +
                                   std::to_string(maxval));
        }
        image.channels[c](i, j) = static_cast<double>(v) * scale;
      }
    }
  }
  return image;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path.string());
  return data;
}

Image read_image(const std::filesystem::path& path) {
  return parse_image(read_file(path));
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("error writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename onto " + path.string());
  }
}

std::string encode_image(const std::vector<Matrix>& channels,
                         ImageFormat format, int maxval,
                         const std::vector<std::string>& comments) {
  if (maxval < 1 || maxval > 65535) {
    throw ValidationError("maxval must lie in [1, 65535]");
  }
  if (static_cast<int>(channels.size()) != channel_count(format)) {
    throw ValidationError("encode_image: " + std::to_string(channels.size()) +
                          " channels for " + std::string(magic(format)));
  }
  const Eigen::Index h = channels[0].rows();
  const Eigen::Index w = channels[0].cols();
  if (h < 1 || w < 1) throw ValidationError("encode_image: empty image");
  for (const Matrix& plane : channels) {
    require_same_shape(plane, channels[0], "encode_image");
  }

  std::ostringstream out;
  out << magic(format) << '\n';
  for (const std::string& line : comments) out << "# " << line << '\n';
  out << w << ' ' << h << '\n' << maxval << '\n';

  const bool binary =
      format == ImageFormat::kPgmBinary || format == ImageFormat::kPpmBinary;
  std::string raster;
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < w; ++j) {
      for (std::size_t c = 0; c < channels.size(); ++c) {
        const double v = channels[c](i, j);
        if (!(v >= 0.0 && v <= 1.0)) {
          throw ValidationError("encode_image: value " + format_number(v) +
                                " outside [0, 1] at (" + std::to_string(i) +
                                ", " + std::to_string(j) + ")");
        }
        const auto q = static_cast<unsigned>(std::floor(v * maxval + 0.5));
        if (binary) {
          if (maxval > 255) raster.push_back(static_cast<char>(q >> 8));
          raster.push_back(static_cast<char>(q & 0xff));
        } else {
          raster += std::to_string(q);
          raster.push_back(j + 1 == w && c + 1 == channels.size() ? '\n' : ' ');
        }
      }
    }
  }
  return out.str() + raster;
}

void write_image(const std::vector<Matrix>& channels,
                 const std::filesystem::path& path, ImageFormat format,
                 int maxval, const std::vector<std::string>& comments) {
  write_file_atomic(path, encode_image(channels, format, maxval, comments));
}

void write_image(const Matrix& plane, const std::filesystem::path& path,
                 ImageFormat format, int maxval,
                 const std::vector<std::string>& comments) {
  write_image(std::vector<Matrix>{plane}, path, format, maxval, comments);
}

BinaryMask read_mask(const std::filesystem::path& path) {
  const Image image = read_image(path);
  if (image.channels.size() != 1) {
    throw ValidationError("mask file must be a PGM: " + path.string());
  }
  const Matrix& plane = image.channels[0];
  BinaryMask mask(plane.rows(), plane.cols());
  for (Eigen::Index j = 0; j < plane.cols(); ++j) {
    for (Eigen::Index i = 0; i < plane.rows(); ++i) {
      if (plane(i, j) != 0.0 && plane(i, j) != 1.0) {
        throw ValidationError("mask values must be 0 or maxval: " +
                              path.string());
      }
      mask.set(i, j, plane(i, j) == 1.0);
    }
  }
  return mask;
}

void write_mask(const BinaryMask& mask, const std::filesystem::path& path) {
  write_image(mask.as_matrix(), path, ImageFormat::kPgmBinary, 255);
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string format_trace_csv(const ConvergenceTrace& trace) {
  std::string out = "t,delta,rel_change,srf,tv\n";
  for (const TraceRecord& rec : trace) {
    out += std::to_string(rec.t) + ',' + format_number(rec.delta) + ',' +
           format_number(rec.rel_change) + ',' + format_number(rec.srf) + ',' +
           format_number(rec.tv) + '\n';
  }
  return out;
}

void write_trace_csv(const ConvergenceTrace& trace,
                     const std::filesystem::path& path) {
  write_file_atomic(path, format_trace_csv(trace));
}

std::string format_comparison_csv(const ComparisonRecord& record) {
  std::string out = "method,psnr_db,rank,iters,seconds\n";
  for (const MethodScore& row : record.rows) {
    out += row.method + ',' + format_number(row.psnr_db) + ',' +
           std::to_string(row.rank) + ',' + std::to_string(row.iters) + ',' +
           format_number(row.seconds) + '\n';
  }
  return out;
}

}  // namespace splic
