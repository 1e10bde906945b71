// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#include "core/image.hpp"

#include <cmath>
#include <stdexcept>

namespace gpfilter {

Image::Image(int width, int height, double fill) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("Image dimensions must be >= 1");
  }
  width_ = width;
  height_ = height;
  samples_.assign(static_cast<std::size_t>(width) * height, fill);
}

double mean_intensity(const Image& img) {
  // Neumaier compensated summation: keeps the centering offset stable on
  // large images where a naive accumulator would drift.
  double sum = 0.0;
  double comp = 0.0;
  const double* p = img.data();
  const std::size_t n = img.pixels();
  for (std::size_t i = 0; i < n; ++i) {
    const double t = sum + p[i];
    if (std::abs(sum) >= std::abs(p[i])) {
      comp += (sum - t) + p[i];
    } else {
      comp += (p[i] - t) + sum;
    }
    sum = t;
  }
  return (sum + comp) / static_cast<double>(n);
}

Image shift(const Image& img, double c) {
  Image out(img.width(), img.height());
  const double* src = img.data();
  double* dst = out.data();
  const std::size_t n = img.pixels();
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = src[i] - c;
  }
  return out;
}

double max_abs_diff(const Image& a, const Image& b) {
  if (!a.same_size(b)) {
    throw std::invalid_argument("max_abs_diff: image dimensions differ");
  }
  double m = 0.0;
  const double* pa = a.data();
  const double* pb = b.data();
  const std::size_t n = a.pixels();
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::abs(pa[i] - pb[i]);
    if (d > m) m = d;
  }
  return m;
}

}  // namespace gpfilter
