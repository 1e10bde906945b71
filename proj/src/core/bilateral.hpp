// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GPFILTER_CORE_BILATERAL_HPP
#define GPFILTER_CORE_BILATERAL_HPP

#include "core/image.hpp"
#include "core/range_kernel.hpp"
#include "core/spatial.hpp"

namespace gpfilter {

enum class SpatialBackend { direct, recursive };

enum class CenteringMode { mean, midpoint };

struct GpfOptions {
  bool centering = true;
  CenteringMode mode = CenteringMode::mean;
  IntensityRange range;  // used by the midpoint mode: t_c = (low + high) / 2
};

// Filter output plus the number of pixels that hit the denominator guard
// and fell back to their input value.
struct FilterResult {
  Image image;
  long long fallback_count = 0;
};

// Brute-force bilateral filter: per pixel, the weighted average over the
// (2W+1)^2 window with weights spatial_weight * gaussian_range. Computed in
// offset form out = f + sum(w * (f_j - f))/sum(w), which preserves constant
// images exactly and keeps the filter shift-invariant to roundoff level.
// The denominator includes the center weight 1, so it never vanishes.
Image exact_bilateral(const Image& img, const SpatialParams& sp,
                      const RangeParams& rp);

// Gauss-polynomial bilateral filter state. One instance drives a single
// filtering run; step() performs one accumulation pass of the main loop.
// After n completed steps: c = 1/n! (by the running recursion), G = H^n,
// and F = H^n * exp(-h^2 / 2 sigma_r^2) pointwise.
struct GpfState {
  Image G;     // running power image H^n
  Image F;     // Gaussian-weighted moment image
  Image Fbar;  // spatially filtered F
  Image P;     // numerator accumulator
  Image Q;     // denominator accumulator
  Image H;     // h / sigma_r
  double c = 1.0;
  int n = 0;   // completed steps
  double t_c = 0.0;

  static GpfState init(const Image& img, const SpatialParams& sp,
                       const RangeParams& rp, SpatialBackend backend,
                       const GpfOptions& opts);

  void step();

  // sigma_r * (P / Q) + t_c with the per-pixel fallback rule.
  FilterResult finalize(const Image& input) const;

 private:
  Image apply_spatial(const Image& src) const;

  SpatialParams sp_;
  RangeParams rp_;
  SpatialBackend backend_ = SpatialBackend::recursive;
};

// Constant-time Gauss-polynomial bilateral filter: centering, degree-N
// accumulation (N + 2 spatial filterings), decentering. Pixels where
// |Q| <= q_min fall back to the input value and are counted.
FilterResult gpf(const Image& img, const SpatialParams& sp,
                 const RangeParams& rp, SpatialBackend backend,
                 const GpfOptions& opts = {});

// Taylor-polynomial baseline: the range kernel is replaced by
// taylor_polynomial, evaluated in constant time by expanding (t - tau)^{2k}
// binomially into spatially filtered moment images f^m, m = 0 .. 2K+1.
// Same fallback rule as gpf where the denominator is tiny or negative.
FilterResult taylor_bilateral(const Image& img, const SpatialParams& sp,
                              const RangeParams& rp, SpatialBackend backend);

// Denominator guard shared by gpf and taylor_bilateral.
inline constexpr double kQMin = 1e-8;

}  // namespace gpfilter

#endif  // GPFILTER_CORE_BILATERAL_HPP
