// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GPFILTER_CORE_SPATIAL_HPP
#define GPFILTER_CORE_SPATIAL_HPP

#include <stdexcept>

#include "core/image.hpp"

namespace gpfilter {

enum class Boundary { replicate, reflect, zero };

// Thrown by recursive_gaussian for sigma_s below its supported range.
struct SigmaTooSmallError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Spatial-kernel configuration. Weights are the unnormalized Gaussian
// exp(-||j||^2 / 2 sigma_s^2), optionally multiplied by kernel_scale (a
// global factor that cancels inside the bilateral ratio; kept as an
// explicit knob so that invariance is testable).
struct SpatialParams {
  double sigma_s = 2.0;
  int window_radius = 6;
  Boundary boundary = Boundary::replicate;
  double kernel_scale = 1.0;

  // Params with the default radius ceil(3 * sigma_s).
  static SpatialParams make(double sigma_s);

  void validate() const;
};

// Default window radius: ceil(3 * sigma_s).
int default_window_radius(double sigma_s);

// Maps index i onto [0, n) according to the boundary rule; returns -1 when
// the sample contributes nothing (zero padding).
int boundary_index(int i, int n, Boundary boundary);

// Unnormalized 2-D spatial weight exp(-(jr^2 + jc^2) / 2 sigma_s^2).
double spatial_weight(int j_row, int j_col, double sigma_s);

// Truncated 1-D kernel mass: sum_{k=-W}^{W} exp(-k^2 / 2 sigma_s^2).
double kernel_mass_1d(double sigma_s, int window_radius);

// Separable windowed convolution with unnormalized weights (row pass then
// column pass); a constant image v maps to v * S, S = kernel_mass_1d^2,
// under the replicate rule.
Image direct_gaussian(const Image& img, const SpatialParams& p);

// Constant-time recursive approximation (4th-order Deriche IIR, causal +
// anticausal, replicate steady-state warm start). Per-pixel cost does not
// depend on sigma_s. Output is normalized to unit DC gain and then rescaled
// by S = kernel_mass_1d(sigma_s, ceil(3 sigma_s))^2 so the two backends are
// interchangeable. Requires sigma_s >= 0.5.
Image recursive_gaussian(const Image& img, double sigma_s,
                         double kernel_scale = 1.0);

}  // namespace gpfilter

#endif  // GPFILTER_CORE_SPATIAL_HPP
