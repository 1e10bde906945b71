// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#include "core/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gpfilter {

double mse_db(double mse) {
  if (mse < 0.0) {
    throw std::invalid_argument("mse_db: mse must be non-negative");
  }
  if (mse == 0.0) return kMseDbFloor;
  return std::max(10.0 * std::log10(mse), kMseDbFloor);
}

ErrorReport compare(const Image& ref, const Image& test, int exclude_border) {
  if (!ref.same_size(test)) {
    throw std::invalid_argument("compare: images differ in size");
  }
  if (exclude_border < 0) {
    throw std::invalid_argument("compare: exclude_border must be >= 0");
  }
  const int w = ref.width();
  const int h = ref.height();
  if (2 * exclude_border >= w || 2 * exclude_border >= h) {
    throw std::invalid_argument(
        "compare: exclude_border leaves no interior pixels");
  }

  double sum = 0.0;
  double comp = 0.0;  // Neumaier compensation
  double max_abs = 0.0;
  long long count = 0;
  for (int r = exclude_border; r < h - exclude_border; ++r) {
    for (int c = exclude_border; c < w - exclude_border; ++c) {
      const double d = ref.at(r, c) - test.at(r, c);
      const double sq = d * d;
      const double t = sum + sq;
      comp += std::abs(sum) >= std::abs(sq) ? (sum - t) + sq : (sq - t) + sum;
      sum = t;
      max_abs = std::max(max_abs, std::abs(d));
      ++count;
    }
  }

  ErrorReport rep;
  rep.pixels = count;
  rep.mse = (sum + comp) / static_cast<double>(count);
  rep.mse_db = mse_db(rep.mse);
  rep.max_abs = max_abs;
  return rep;
}

}  // namespace gpfilter
