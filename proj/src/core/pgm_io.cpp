// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#include "core/pgm_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace gpfilter {

namespace {

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

// Cursor over the header token stream: whitespace separates tokens and a '#'
// starts a comment that runs to the end of the line.
struct Cursor {
  const std::uint8_t* bytes;
  std::size_t size;
  std::size_t pos = 0;
  std::size_t last_start = 0;  // offset of the most recent token

  void skip_separators() {
    while (pos < size) {
      if (is_space(bytes[pos])) {
        ++pos;
      } else if (bytes[pos] == '#') {
        while (pos < size && bytes[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  // Reads the next unsigned decimal token; reports it under `kind` when the
  // token is malformed or `value` would be exceeded.
  long long read_number(PgmErrorKind kind, const char* what, long long limit) {
    skip_separators();
    if (pos >= size) {
      throw PgmParseError(PgmErrorKind::truncated, size,
                          std::string("missing ") + what);
    }
    const std::size_t start = pos;
    last_start = start;
    long long value = 0;
    bool any = false;
    while (pos < size && bytes[pos] >= '0' && bytes[pos] <= '9') {
      value = value * 10 + (bytes[pos] - '0');
      any = true;
      ++pos;
      if (value > limit) {
        throw PgmParseError(kind, start,
                            std::string(what) + " exceeds " +
                                std::to_string(limit));
      }
    }
    if (!any || (pos < size && !is_space(bytes[pos]) && bytes[pos] != '#')) {
      throw PgmParseError(kind, start, std::string("malformed ") + what);
    }
    return value;
  }
};

}  // namespace

const char* pgm_error_kind_name(PgmErrorKind kind) {
  switch (kind) {
    case PgmErrorKind::bad_magic: return "bad_magic";
    case PgmErrorKind::bad_dims: return "bad_dims";
    case PgmErrorKind::bad_maxval: return "bad_maxval";
    case PgmErrorKind::truncated: return "truncated";
    case PgmErrorKind::bad_pixel: return "bad_pixel";
  }
  return "unknown";
}

PgmParseError::PgmParseError(PgmErrorKind kind, std::size_t offset,
                             const std::string& detail)
    : std::runtime_error(std::string("PGM parse error (") +
                         pgm_error_kind_name(kind) + ") at byte " +
                         std::to_string(offset) + ": " + detail),
      kind_(kind),
      offset_(offset) {}

Image decode_pgm(const std::uint8_t* bytes, std::size_t size) {
  if (size < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
    throw PgmParseError(PgmErrorKind::bad_magic, 0,
                        "expected magic \"P5\" or \"P2\"");
  }
  const bool binary = bytes[1] == '5';
  Cursor cur{bytes, size, 2};

  const long long w =
      cur.read_number(PgmErrorKind::bad_dims, "width", 1 << 20);
  if (w < 1) {
    throw PgmParseError(PgmErrorKind::bad_dims, cur.last_start,
                        "width must be positive");
  }
  const long long h =
      cur.read_number(PgmErrorKind::bad_dims, "height", 1 << 20);
  if (h < 1) {
    throw PgmParseError(PgmErrorKind::bad_dims, cur.last_start,
                        "height must be positive");
  }
  const long long maxval =
      cur.read_number(PgmErrorKind::bad_maxval, "maxval", 255);
  if (maxval != 255) {
    throw PgmParseError(PgmErrorKind::bad_maxval, cur.last_start,
                        "only maxval 255 is supported");
  }

  Image img(static_cast<int>(w), static_cast<int>(h));
  const std::size_t count = img.pixels();

  if (binary) {
    // Exactly one whitespace byte separates the maxval from the raster.
    if (cur.pos >= size) {
      throw PgmParseError(PgmErrorKind::truncated, size, "missing raster");
    }
    if (!is_space(bytes[cur.pos])) {
      throw PgmParseError(PgmErrorKind::bad_maxval, cur.pos,
                          "expected a single whitespace byte after maxval");
    }
    ++cur.pos;
    if (size - cur.pos < count) {
      throw PgmParseError(PgmErrorKind::truncated, size,
                          "raster has " + std::to_string(size - cur.pos) +
                              " of " + std::to_string(count) + " bytes");
    }
    double* out = img.data();
    for (std::size_t i = 0; i < count; ++i) {
      out[i] = bytes[cur.pos + i];
    }
  } else {
    double* out = img.data();
    for (std::size_t i = 0; i < count; ++i) {
      out[i] = static_cast<double>(
          cur.read_number(PgmErrorKind::bad_pixel, "sample", 255));
    }
  }
  return img;
}

std::uint8_t quantize_sample(double v) {
  if (!(v > 0.0)) return 0;  // negative, zero, or NaN
  if (v >= 255.0) return 255;
  return static_cast<std::uint8_t>(std::lround(v));
}

std::vector<std::uint8_t> encode_pgm(const Image& img) {
  const std::string header = "P5\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(out.size() + img.pixels());
  const double* s = img.data();
  for (std::size_t i = 0; i < img.pixels(); ++i) {
    out.push_back(quantize_sample(s[i]));
  }
  return out;
}

Image read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path + " for reading");
  }
  std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(in)),
                                std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw std::runtime_error("read failure on " + path);
  }
  return decode_pgm(buf.data(), buf.size());
}

void write_pgm(const Image& img, const std::string& path) {
  const std::vector<std::uint8_t> buf = encode_pgm(img);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size()));
  if (!out) {
    throw std::runtime_error("write failure on " + path);
  }
}

}  // namespace gpfilter
