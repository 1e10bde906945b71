// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#include "core/range_kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace gpfilter {

namespace {

// Shared one-sided Gaussian factor. gaussian_range and gauss_polynomial
// must route through the same expression so that gauss_polynomial(t, 0)
// reproduces gaussian_range(t, 0) bit-for-bit.
inline double gauss_factor(double x, double sigma_r) {
  return std::exp(-(x * x) / (2.0 * sigma_r * sigma_r));
}

}  // namespace

void RangeParams::validate() const {
  if (!(sigma_r > 0.0)) {
    throw std::invalid_argument("RangeParams: sigma_r must be > 0");
  }
  if (degree < 0) {
    throw std::invalid_argument("RangeParams: degree must be >= 0");
  }
}

double gaussian_range(double t, double tau, const RangeParams& p) {
  p.validate();
  return gauss_factor(t - tau, p.sigma_r);
}

double gauss_polynomial(double t, double tau, const RangeParams& p) {
  p.validate();
  const double z = (t / p.sigma_r) * (tau / p.sigma_r);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n <= p.degree; ++n) {
    term *= z / n;
    sum += term;
  }
  return (gauss_factor(tau, p.sigma_r) * gauss_factor(t, p.sigma_r)) * sum;
}

double taylor_polynomial(double t, double tau, const RangeParams& p) {
  p.validate();
  const double d = t - tau;
  const double u = (d * d) / (2.0 * p.sigma_r * p.sigma_r);
  const int terms = p.degree / 2;  // degree counts the polynomial in (t - tau)
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= terms; ++k) {
    term *= -u / k;
    sum += term;
  }
  return sum;
}

double sup_error(const RangeParams& p, double tau, const IntensityRange& range,
                 double step, RangeApprox which) {
  p.validate();
  if (!(range.low < range.high)) {
    throw std::invalid_argument("sup_error: range.low must be < range.high");
  }
  if (!(step > 0.0)) {
    throw std::invalid_argument("sup_error: step must be > 0");
  }
  const auto eval = [&](double t) {
    const double approx = which == RangeApprox::gauss_polynomial
                              ? gauss_polynomial(t, tau, p)
                              : taylor_polynomial(t, tau, p);
    return std::abs(gaussian_range(t, tau, p) - approx);
  };
  double worst = 0.0;
  const double span = range.high - range.low;
  const long long count = static_cast<long long>(std::floor(span / step + 1e-9));
  double last = range.low;
  for (long long k = 0; k <= count; ++k) {
    last = range.low + static_cast<double>(k) * step;
    worst = std::max(worst, eval(last));
  }
  if (last < range.high - 1e-9 * step) {
    worst = std::max(worst, eval(range.high));  // keep the grid closed
  }
  return worst;
}

}  // namespace gpfilter
