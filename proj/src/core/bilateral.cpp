// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#include "core/bilateral.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/parallel.hpp"

namespace gpfilter {

Image exact_bilateral(const Image& img, const SpatialParams& sp,
                      const RangeParams& rp) {
  sp.validate();
  rp.validate();
  const int W = sp.window_radius;
  const int w = img.width();
  const int h = img.height();
  const int span = 2 * W + 1;

  std::vector<double> ws(static_cast<std::size_t>(span) * span);
  for (int a = -W; a <= W; ++a) {
    for (int b = -W; b <= W; ++b) {
      ws[static_cast<std::size_t>(a + W) * span + (b + W)] =
          sp.kernel_scale * spatial_weight(a, b, sp.sigma_s);
    }
  }
  const double inv2s2 = 1.0 / (2.0 * rp.sigma_r * rp.sigma_r);

  Image out(w, h);
  parallel_for(h, [&](int r) {
    for (int x = 0; x < w; ++x) {
      const double fc = img.at(r, x);
      double num = 0.0;
      double den = 0.0;
      for (int a = -W; a <= W; ++a) {
        const int rr = boundary_index(r + a, h, sp.boundary);
        if (rr < 0) continue;  // zero padding contributes nothing
        for (int b = -W; b <= W; ++b) {
          const int cc = boundary_index(x + b, w, sp.boundary);
          if (cc < 0) continue;
          const double d = img.at(rr, cc) - fc;
          const double wgt =
              ws[static_cast<std::size_t>(a + W) * span + (b + W)] *
              std::exp(-(d * d) * inv2s2);
          num += wgt * d;
          den += wgt;
        }
      }
      out.at(r, x) = fc + num / den;
    }
  });
  return out;
}

Image GpfState::apply_spatial(const Image& src) const {
  return backend_ == SpatialBackend::direct
             ? direct_gaussian(src, sp_)
             : recursive_gaussian(src, sp_.sigma_s, sp_.kernel_scale);
}

GpfState GpfState::init(const Image& img, const SpatialParams& sp,
                        const RangeParams& rp, SpatialBackend backend,
                        const GpfOptions& opts) {
  sp.validate();
  rp.validate();
  if (!(opts.range.low < opts.range.high)) {
    throw std::invalid_argument("GpfOptions: range.low must be < range.high");
  }

  GpfState s;
  s.sp_ = sp;
  s.rp_ = rp;
  s.backend_ = backend;
  s.t_c = 0.0;
  if (opts.centering) {
    s.t_c = opts.mode == CenteringMode::mean
                ? mean_intensity(img)
                : (opts.range.low + opts.range.high) / 2.0;
  }

  const int w = img.width();
  const int h = img.height();
  s.G = Image(w, h, 1.0);
  s.P = Image(w, h, 0.0);
  s.Q = Image(w, h, 0.0);
  s.H = Image(w, h);
  s.F = Image(w, h);

  const double inv2s2 = 1.0 / (2.0 * rp.sigma_r * rp.sigma_r);
  const double* f = img.data();
  double* hs = s.H.data();
  double* fs = s.F.data();
  const std::size_t n = img.pixels();
  for (std::size_t i = 0; i < n; ++i) {
    const double hv = f[i] - s.t_c;
    hs[i] = hv / rp.sigma_r;
    fs[i] = std::exp(-(hv * hv) * inv2s2);
  }
  s.Fbar = s.apply_spatial(s.F);
  s.c = 1.0;
  s.n = 0;
  return s;
}

void GpfState::step() {
  const std::size_t count = F.pixels();
  double* g = G.data();
  double* f = F.data();
  double* p = P.data();
  double* q = Q.data();
  const double* hh = H.data();

  const double* fb = Fbar.data();
  for (std::size_t i = 0; i < count; ++i) {
    q[i] += c * g[i] * fb[i];
    f[i] = hh[i] * f[i];
  }
  Fbar = apply_spatial(F);
  fb = Fbar.data();
  for (std::size_t i = 0; i < count; ++i) {
    p[i] += c * g[i] * fb[i];
    g[i] = hh[i] * g[i];
  }
  c = c / (n + 1);
  ++n;
}

FilterResult GpfState::finalize(const Image& input) const {
  FilterResult res;
  res.image = Image(input.width(), input.height());
  const double* in = input.data();
  const double* p = P.data();
  const double* q = Q.data();
  double* out = res.image.data();
  const std::size_t count = input.pixels();
  for (std::size_t i = 0; i < count; ++i) {
    if (std::abs(q[i]) <= kQMin) {
      out[i] = in[i];
      ++res.fallback_count;
    } else {
      out[i] = rp_.sigma_r * (p[i] / q[i]) + t_c;
    }
  }
  return res;
}

FilterResult gpf(const Image& img, const SpatialParams& sp,
                 const RangeParams& rp, SpatialBackend backend,
                 const GpfOptions& opts) {
  GpfState state = GpfState::init(img, sp, rp, backend, opts);
  for (int n = 0; n <= rp.degree; ++n) {
    state.step();
  }
  return state.finalize(img);
}

FilterResult taylor_bilateral(const Image& img, const SpatialParams& sp,
                              const RangeParams& rp, SpatialBackend backend) {
  sp.validate();
  rp.validate();
  const int K = rp.degree / 2;
  const int w = img.width();
  const int h = img.height();

  const auto filt = [&](const Image& src) {
    return backend == SpatialBackend::direct
               ? direct_gaussian(src, sp)
               : recursive_gaussian(src, sp.sigma_s, sp.kernel_scale);
  };

  // Filtered moment images Mbar[m] = spatial(f^m), m = 0 .. 2K+1.
  std::vector<Image> mbar;
  mbar.reserve(2 * K + 2);
  Image moment(w, h, 1.0);
  for (int m = 0; m <= 2 * K + 1; ++m) {
    mbar.push_back(filt(moment));
    double* mp = moment.data();
    const double* f = img.data();
    for (std::size_t i = 0; i < moment.pixels(); ++i) mp[i] *= f[i];
  }

  const double sr2x2 = 2.0 * rp.sigma_r * rp.sigma_r;
  FilterResult res;
  res.image = Image(w, h);
  long long fallbacks = 0;
  const double* f = img.data();
  double* out = res.image.data();
  const std::size_t count = img.pixels();
  for (std::size_t i = 0; i < count; ++i) {
    const double t = f[i];
    double num = 0.0;
    double den = 0.0;
    double a = 1.0;  // a_k = (-1)^k / (2^k sigma_r^{2k} k!), running product
    for (int k = 0; k <= K; ++k) {
      double binom = 1.0;  // C(2k, m), running product, m descending
      double pw = 1.0;     // (-t)^{2k - m}
      for (int m = 2 * k; m >= 0; --m) {
        const double coef = a * binom * pw;
        den += coef * mbar[m].data()[i];
        num += coef * mbar[m + 1].data()[i];
        if (m > 0) {
          binom = binom * m / (2 * k - m + 1);
          pw *= -t;
        }
      }
      a *= -1.0 / (sr2x2 * (k + 1));
    }
    if (den <= kQMin) {  // tiny or negative: the truncation broke down here
      out[i] = t;
      ++fallbacks;
    } else {
      out[i] = num / den;
    }
  }
  res.fallback_count = fallbacks;
  return res;
}

}  // namespace gpfilter
