// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef GPFILTER_CORE_RANGE_KERNEL_HPP
#define GPFILTER_CORE_RANGE_KERNEL_HPP

#include "core/image.hpp"

namespace gpfilter {

// Range-kernel configuration: Gaussian width sigma_r and the polynomial
// degree N used by the approximations.
struct RangeParams {
  double sigma_r = 30.0;
  int degree = 20;

  void validate() const;
};

// Exact Gaussian range kernel exp(-(t - tau)^2 / 2 sigma_r^2); value in
// (0, 1], equal to 1 iff t == tau.
double gaussian_range(double t, double tau, const RangeParams& p);

// Degree-N Gauss-polynomial approximation:
//   exp(-tau^2/2s^2) * exp(-t^2/2s^2) * sum_{n=0}^{N} (1/n!) (tau t / s^2)^n.
// The coefficient runs by term *= z/n (never an explicit factorial, which
// would overflow for N >= 21). May be negative when tau*t < 0, since a
// truncated exponential series is not sign-definite.
double gauss_polynomial(double t, double tau, const RangeParams& p);

// Truncated Taylor baseline: sum_{k=0}^{K} (-u)^k / k! with
// u = (t - tau)^2 / 2 sigma_r^2 and K = floor(N / 2), i.e. the degree-N
// polynomial in (t - tau). Unbounded in magnitude for large |t - tau|.
double taylor_polynomial(double t, double tau, const RangeParams& p);

enum class RangeApprox { gauss_polynomial, taylor };

// Max over the closed uniform grid {low, low+step, ..., high} (both
// endpoints included) of |gaussian_range(t, tau) - approx(t, tau)|.
double sup_error(const RangeParams& p, double tau, const IntensityRange& range,
                 double step, RangeApprox which);

}  // namespace gpfilter

#endif  // GPFILTER_CORE_RANGE_KERNEL_HPP
