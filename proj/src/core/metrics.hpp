// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GPFILTER_CORE_METRICS_HPP
#define GPFILTER_CORE_METRICS_HPP

#include "core/image.hpp"

namespace gpfilter {

struct ErrorReport {
  double mse = 0.0;
  double mse_db = 0.0;  // 10 * log10(mse), floored at kMseDbFloor when mse == 0
  double max_abs = 0.0;
  long long pixels = 0;  // samples actually compared
};

// Reported instead of -inf for a perfect match.
inline constexpr double kMseDbFloor = -400.0;

// Mean squared error on the decibel scale.
double mse_db(double mse);

// Per-pixel error statistics between a reference and a test image of equal
// size. exclude_border trims that many pixels from every edge before
// comparing; it must leave a non-empty interior. Throws std::invalid_argument
// on size mismatch or an out-of-range border.
ErrorReport compare(const Image& ref, const Image& test,
                    int exclude_border = 0);

}  // namespace gpfilter

#endif  // GPFILTER_CORE_METRICS_HPP
