// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GPFILTER_CORE_IMAGE_HPP
#define GPFILTER_CORE_IMAGE_HPP

#include <cstddef>
#include <vector>

namespace gpfilter {

// Row-major grid of double-precision intensity samples. 8-bit inputs are
// widened losslessly on load; all filtering runs in doubles.
class Image {
 public:
  Image() = default;
  Image(int width, int height, double fill = 0.0);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t pixels() const { return samples_.size(); }

  double* data() { return samples_.data(); }
  const double* data() const { return samples_.data(); }

  double& at(int row, int col) { return samples_[idx(row, col)]; }
  double at(int row, int col) const { return samples_[idx(row, col)]; }

  bool same_size(const Image& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

 private:
  std::size_t idx(int row, int col) const {
    return static_cast<std::size_t>(row) * width_ + col;
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> samples_;
};

// Closed intensity interval [low, high]; low < high.
struct IntensityRange {
  double low = 0.0;
  double high = 255.0;
};

// Arithmetic mean of all samples, compensated summation.
double mean_intensity(const Image& img);

// Returns a copy with every sample decreased by c.
Image shift(const Image& img, double c);

// max over pixels of |a - b|; throws std::invalid_argument on size mismatch.
double max_abs_diff(const Image& a, const Image& b);

}  // namespace gpfilter

#endif  // GPFILTER_CORE_IMAGE_HPP
