// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GPFILTER_CORE_PGM_IO_HPP
#define GPFILTER_CORE_PGM_IO_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/image.hpp"

namespace gpfilter {

enum class PgmErrorKind { bad_magic, bad_dims, bad_maxval, truncated, bad_pixel };

const char* pgm_error_kind_name(PgmErrorKind kind);

// Parse failure with the kind of defect and the byte offset (from the start
// of the buffer) where it was detected.
class PgmParseError : public std::runtime_error {
 public:
  PgmParseError(PgmErrorKind kind, std::size_t offset, const std::string& detail);

  PgmErrorKind kind() const { return kind_; }
  std::size_t offset() const { return offset_; }

 private:
  PgmErrorKind kind_;
  std::size_t offset_;
};

// Decode a binary (P5) or ASCII (P2) PGM buffer. Header tokens may be
// separated by whitespace and '#' comments; sample values are widened to
// double unchanged. Bytes past the pixel data are ignored. Throws
// PgmParseError on malformed input.
Image decode_pgm(const std::uint8_t* bytes, std::size_t size);

// Canonical binary encoding: "P5\n<w> <h>\n255\n" followed by one byte per
// sample, quantized with quantize_sample.
std::vector<std::uint8_t> encode_pgm(const Image& img);

// Clamp to [0, 255] and round halfway cases away from zero; NaN maps to 0.
std::uint8_t quantize_sample(double v);

// File wrappers around decode_pgm / encode_pgm; throw std::runtime_error
// when the file cannot be read or written.
Image read_pgm(const std::string& path);
void write_pgm(const Image& img, const std::string& path);

}  // namespace gpfilter

#endif  // GPFILTER_CORE_PGM_IO_HPP
