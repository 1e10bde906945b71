// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#include "core/range_kernel.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"

using gpfilter::IntensityRange;
using gpfilter::RangeApprox;
using gpfilter::RangeParams;

namespace {

RangeParams params(double sigma_r, int degree) {
  RangeParams p;
  p.sigma_r = sigma_r;
  p.degree = degree;
  return p;
}

}  // namespace

TEST_CASE("range params validation") {
  CHECK_THROWS_AS(params(0.0, 5).validate(), std::invalid_argument);
  CHECK_THROWS_AS(params(-2.0, 5).validate(), std::invalid_argument);
  CHECK_THROWS_AS(params(30.0, -1).validate(), std::invalid_argument);
  CHECK_NOTHROW(params(30.0, 0).validate());
}

TEST_CASE("gaussian_range analytic values") {
  const RangeParams p = params(30.0, 20);
  CHECK(gpfilter::gaussian_range(42.0, 42.0, p) == 1.0);
  CHECK(gpfilter::gaussian_range(-17.5, -17.5, p) == 1.0);

  // |t - tau| = sigma_r: exp(-1/2)
  CHECK(gpfilter::gaussian_range(40.0, 10.0, p) ==
        doctest::Approx(0.60653065971263342).epsilon(1e-15));

  // The far-tail scaling factor at tau = 100, t = 0: exp(-100^2/1800)
  CHECK(gpfilter::gaussian_range(0.0, 100.0, p) ==
        doctest::Approx(0.0038659201394728067).epsilon(1e-14));
}

TEST_CASE("gauss_polynomial collapses to the exact kernel at tau = 0") {
  // With tau = 0 every polynomial term beyond n = 0 vanishes, so the value
  // must be bitwise identical to gaussian_range for any degree.
  const double ts[] = {-300.0, -60.0, 0.0, 17.3, 60.0, 255.0};
  for (const int degree : {0, 5, 20}) {
    const RangeParams p = params(30.0, degree);
    for (const double t : ts) {
      CHECK(gpfilter::gauss_polynomial(t, 0.0, p) ==
            gpfilter::gaussian_range(t, 0.0, p));
    }
  }
}

TEST_CASE("gauss_polynomial is symmetric in t and tau") {
  const RangeParams p10 = params(30.0, 10);
  CHECK(gpfilter::gauss_polynomial(50.0, 10.0, p10) ==
        gpfilter::gauss_polynomial(10.0, 50.0, p10));

  std::mt19937 gen(7);
  for (int i = 0; i < 200; ++i) {
    const double t = (gen() % 51100) / 100.0 - 255.0;
    const double tau = (gen() % 51100) / 100.0 - 255.0;
    const RangeParams p = params(5.0 + (gen() % 60), 1 + (gen() % 25));
    CHECK(gpfilter::gauss_polynomial(t, tau, p) ==
          gpfilter::gauss_polynomial(tau, t, p));
  }
}

TEST_CASE("gauss_polynomial truncation at t = tau = 100") {
  // High-precision series oracle: the degree-20 truncation visibly lags the
  // exact kernel value 1 because the series terms at z = (100/30)^2 are
  // still growing at n = 11.
  const double v = gpfilter::gauss_polynomial(100.0, 100.0, params(30.0, 20));
  CHECK(v == doctest::Approx(0.99479190737420317).epsilon(1e-13));
  CHECK(v < 1.0);
}

TEST_CASE("gauss_polynomial degree 0 is the product of the two factors") {
  const RangeParams p = params(30.0, 0);
  CHECK(gpfilter::gauss_polynomial(30.0, 60.0, p) ==
        doctest::Approx(std::exp(-0.5) * std::exp(-2.0)).epsilon(1e-15));
}

TEST_CASE("gauss_polynomial can dip negative for opposite signs") {
  // Truncated exponential series of a negative argument: not sign-definite.
  bool negative_seen = false;
  for (int degree = 1; degree <= 25; degree += 2) {
    if (gpfilter::gauss_polynomial(120.0, -120.0, params(30.0, degree)) < 0) {
      negative_seen = true;
    }
  }
  CHECK(negative_seen);
}

TEST_CASE("taylor_polynomial analytic values") {
  CHECK(gpfilter::taylor_polynomial(88.0, 88.0, params(30.0, 20)) == 1.0);
  CHECK(gpfilter::taylor_polynomial(-3.25, -3.25, params(7.0, 4)) == 1.0);

  // K = floor(N/2) = 0: the constant truncation.
  for (const int degree : {0, 1}) {
    const RangeParams p = params(30.0, degree);
    CHECK(gpfilter::taylor_polynomial(200.0, 0.0, p) == 1.0);
    CHECK(gpfilter::taylor_polynomial(-255.0, 255.0, p) == 1.0);
  }

  // One term: 1 - (t-tau)^2 / (2 sigma_r^2).
  const RangeParams p2 = params(30.0, 2);
  CHECK(gpfilter::taylor_polynomial(40.0, 10.0, p2) ==
        doctest::Approx(1.0 - 900.0 / 1800.0).epsilon(1e-15));
}

TEST_CASE("taylor_polynomial diverges where the exact kernel vanishes") {
  // High-precision series oracle at t = 170, tau = 10, sigma_r = 30, N = 10;
  // the exact kernel there is ~6.7e-7, so the baseline is off by a factor
  // ~5e9 and has the wrong sign.
  const double v = gpfilter::taylor_polynomial(170.0, 10.0, params(30.0, 10));
  CHECK(v == doctest::Approx(-3535.8465014931102).epsilon(1e-12));
  const double exact = gpfilter::gaussian_range(170.0, 10.0, params(30.0, 10));
  CHECK(std::abs(v / exact) > 1e9);
}

TEST_CASE("sup_error vanishes for the gauss polynomial at tau = 0") {
  const IntensityRange full{0.0, 255.0};
  for (const double sigma_r : {10.0, 30.0, 80.0}) {
    CHECK(gpfilter::sup_error(params(sigma_r, 10), 0.0, full, 1.0,
                              RangeApprox::gauss_polynomial) <= 1e-15);
  }
}

TEST_CASE("sup_error against the dense-grid oracle") {
  const IntensityRange full{0.0, 255.0};
  const RangeParams p = params(30.0, 10);

  const double gp =
      gpfilter::sup_error(p, 10.0, full, 1.0, RangeApprox::gauss_polynomial);
  CHECK(gp == doctest::Approx(3.2148609805879729e-10).epsilon(1e-6));

  const double taylor =
      gpfilter::sup_error(p, 10.0, full, 1.0, RangeApprox::taylor);
  CHECK(taylor == doctest::Approx(297781.34343951289).epsilon(1e-12));

  CHECK(taylor / gp > 1e10);
}

TEST_CASE("sup_error grid includes both endpoints") {
  // tau sits on the upper endpoint: the error at t = high is 0, while the
  // worst grid point is the lower endpoint. A half-open grid would miss
  // t = high for spans that are not a multiple of the step; use a span of
  // 2.5 steps to exercise the endpoint catch.
  const RangeParams p = params(30.0, 2);
  const double full = gpfilter::sup_error(p, 0.0, IntensityRange{0.0, 250.0},
                                          100.0, RangeApprox::taylor);
  // Grid {0, 100, 200} plus the endpoint 250.
  const double at250 = std::abs(gpfilter::gaussian_range(250.0, 0.0, p) -
                                gpfilter::taylor_polynomial(250.0, 0.0, p));
  const double at200 = std::abs(gpfilter::gaussian_range(200.0, 0.0, p) -
                                gpfilter::taylor_polynomial(200.0, 0.0, p));
  CHECK(at250 > at200);  // the endpoint dominates for the diverging baseline
  CHECK(full == doctest::Approx(at250).epsilon(1e-15));
}

TEST_CASE("sup_error converges monotonically in degree") {
  const IntensityRange full{0.0, 255.0};
  for (const double sigma_r : {15.0, 30.0}) {
    for (const double tau : {50.0, 120.0, 255.0}) {
      for (int degree = 5; degree <= 20; degree += 5) {
        const double lo =
            gpfilter::sup_error(params(sigma_r, degree + 5), tau, full, 1.0,
                                RangeApprox::gauss_polynomial);
        const double hi = gpfilter::sup_error(params(sigma_r, degree), tau,
                                              full, 1.0,
                                              RangeApprox::gauss_polynomial);
        CHECK(lo <= hi);
      }
    }
  }
}

TEST_CASE("sup_error is non-decreasing in |tau|") {
  const IntensityRange full{0.0, 255.0};
  const RangeParams p = params(30.0, 20);
  double prev = -1.0;
  for (const double tau : {0.0, 10.0, 50.0, 120.0}) {
    const double e =
        gpfilter::sup_error(p, tau, full, 1.0, RangeApprox::gauss_polynomial);
    CHECK(e >= prev);
    prev = e;
  }
}

TEST_CASE("centering the intensity interval pays off") {
  // Worst-case sup_error over all integer tau in the centered interval
  // [-128, 127] vs the raw interval [0, 255]: centering halves the maximum
  // |tau| and |t|, which shrinks the worst truncation error dramatically.
  const RangeParams p = params(30.0, 20);
  const IntensityRange centered{-128.0, 127.0};
  const IntensityRange raw{0.0, 255.0};

  double worst_centered = 0.0;
  double worst_raw = 0.0;
  for (int k = 0; k < 256; ++k) {
    worst_centered = std::max(
        worst_centered,
        gpfilter::sup_error(p, -128.0 + k, centered, 1.0,
                            RangeApprox::gauss_polynomial));
    worst_raw = std::max(
        worst_raw, gpfilter::sup_error(p, static_cast<double>(k), raw, 1.0,
                                       RangeApprox::gauss_polynomial));
  }
  CHECK(worst_centered <= worst_raw);
  CHECK(worst_centered == doctest::Approx(0.28578).epsilon(1e-3));
  CHECK(worst_raw == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("sup_error argument validation") {
  const RangeParams p = params(30.0, 10);
  CHECK_THROWS_AS(gpfilter::sup_error(p, 0.0, IntensityRange{5.0, 5.0}, 1.0,
                                      RangeApprox::gauss_polynomial),
                  std::invalid_argument);
  CHECK_THROWS_AS(gpfilter::sup_error(p, 0.0, IntensityRange{0.0, 255.0}, 0.0,
                                      RangeApprox::gauss_polynomial),
                  std::invalid_argument);
}
