// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#include "gpfilter/gpfilter.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core/bilateral.hpp"
#include "core/image.hpp"
#include "core/metrics.hpp"
#include "core/parallel.hpp"
#include "core/pgm_io.hpp"
#include "core/range_kernel.hpp"
#include "core/spatial.hpp"

struct gpf_image {
  gpfilter::Image img;
};

namespace {

thread_local std::string g_last_error;

gpf_status fail(gpf_status status, const std::string& detail) {
  g_last_error = detail;
  return status;
}

gpf_status pgm_status(gpfilter::PgmErrorKind kind) {
  switch (kind) {
    case gpfilter::PgmErrorKind::bad_magic: return GPF_ERR_PGM_BAD_MAGIC;
    case gpfilter::PgmErrorKind::bad_dims: return GPF_ERR_PGM_BAD_DIMS;
    case gpfilter::PgmErrorKind::bad_maxval: return GPF_ERR_PGM_BAD_MAXVAL;
    case gpfilter::PgmErrorKind::truncated: return GPF_ERR_PGM_TRUNCATED;
    case gpfilter::PgmErrorKind::bad_pixel: return GPF_ERR_PGM_BAD_PIXEL;
  }
  return GPF_ERR_UNKNOWN;
}

// Runs fn, translating the library's exceptions into status codes.
template <typename Fn>
gpf_status guarded(Fn&& fn) {
  try {
    fn();
    return GPF_OK;
  } catch (const gpfilter::PgmParseError& e) {
    return fail(pgm_status(e.kind()), e.what());
  } catch (const gpfilter::SigmaTooSmallError& e) {
    return fail(GPF_ERR_SIGMA_TOO_SMALL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GPF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::runtime_error& e) {
    return fail(GPF_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(GPF_ERR_UNKNOWN, e.what());
  }
}

gpfilter::SpatialParams to_spatial(const gpf_spatial_params& sp) {
  gpfilter::SpatialParams out;
  out.sigma_s = sp.sigma_s;
  out.window_radius = sp.window_radius > 0
                          ? sp.window_radius
                          : gpfilter::default_window_radius(sp.sigma_s);
  switch (sp.boundary) {
    case GPF_BOUNDARY_REPLICATE: out.boundary = gpfilter::Boundary::replicate; break;
    case GPF_BOUNDARY_REFLECT: out.boundary = gpfilter::Boundary::reflect; break;
    case GPF_BOUNDARY_ZERO: out.boundary = gpfilter::Boundary::zero; break;
    default:
      throw std::invalid_argument("boundary must be replicate, reflect, or zero");
  }
  out.kernel_scale = sp.kernel_scale;
  return out;
}

gpfilter::SpatialBackend to_backend(gpf_backend backend) {
  switch (backend) {
    case GPF_BACKEND_DIRECT: return gpfilter::SpatialBackend::direct;
    case GPF_BACKEND_RECURSIVE: return gpfilter::SpatialBackend::recursive;
  }
  throw std::invalid_argument("backend must be direct or recursive");
}

gpfilter::RangeParams to_range(const gpf_range_params& rp) {
  gpfilter::RangeParams out;
  out.sigma_r = rp.sigma_r;
  out.degree = rp.degree;
  return out;
}

// Moves a finished image into a fresh handle.
void deliver(gpfilter::Image&& img, gpf_image** out) {
  *out = new gpf_image{std::move(img)};
}

}  // namespace

extern "C" {

const char* gpf_status_name(gpf_status status) {
  switch (status) {
    case GPF_OK: return "GPF_OK";
    case GPF_ERR_INVALID_ARGUMENT: return "GPF_ERR_INVALID_ARGUMENT";
    case GPF_ERR_IO: return "GPF_ERR_IO";
    case GPF_ERR_SIGMA_TOO_SMALL: return "GPF_ERR_SIGMA_TOO_SMALL";
    case GPF_ERR_PGM_BAD_MAGIC: return "GPF_ERR_PGM_BAD_MAGIC";
    case GPF_ERR_PGM_BAD_DIMS: return "GPF_ERR_PGM_BAD_DIMS";
    case GPF_ERR_PGM_BAD_MAXVAL: return "GPF_ERR_PGM_BAD_MAXVAL";
    case GPF_ERR_PGM_TRUNCATED: return "GPF_ERR_PGM_TRUNCATED";
    case GPF_ERR_PGM_BAD_PIXEL: return "GPF_ERR_PGM_BAD_PIXEL";
    case GPF_ERR_UNKNOWN: return "GPF_ERR_UNKNOWN";
  }
  return "GPF_ERR_UNKNOWN";
}

const char* gpf_last_error(void) { return g_last_error.c_str(); }

const char* gpf_version(void) { return "1.0.0"; }

gpf_status gpf_image_create(int width, int height, gpf_image** out) {
  if (out == nullptr) return fail(GPF_ERR_INVALID_ARGUMENT, "out is null");
  *out = nullptr;
  return guarded([&] { deliver(gpfilter::Image(width, height), out); });
}

void gpf_image_destroy(gpf_image* img) { delete img; }

int gpf_image_width(const gpf_image* img) {
  return img == nullptr ? 0 : img->img.width();
}

int gpf_image_height(const gpf_image* img) {
  return img == nullptr ? 0 : img->img.height();
}

double* gpf_image_data(gpf_image* img) {
  return img == nullptr ? nullptr : img->img.data();
}

const double* gpf_image_cdata(const gpf_image* img) {
  return img == nullptr ? nullptr : img->img.data();
}

void gpf_spatial_params_init(gpf_spatial_params* sp) {
  if (sp == nullptr) return;
  sp->sigma_s = 2.0;
  sp->window_radius = 0;  // auto: ceil(3 * sigma_s)
  sp->boundary = GPF_BOUNDARY_REPLICATE;
  sp->kernel_scale = 1.0;
}

void gpf_range_params_init(gpf_range_params* rp) {
  if (rp == nullptr) return;
  rp->sigma_r = 30.0;
  rp->degree = 20;
}

gpf_status gpf_filter_exact(const gpf_image* in, const gpf_spatial_params* sp,
                            const gpf_range_params* rp, gpf_image** out) {
  if (in == nullptr || sp == nullptr || rp == nullptr || out == nullptr) {
    return fail(GPF_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    deliver(gpfilter::exact_bilateral(in->img, to_spatial(*sp), to_range(*rp)),
            out);
  });
}

gpf_status gpf_filter_gpf(const gpf_image* in, const gpf_spatial_params* sp,
                          const gpf_range_params* rp, gpf_backend backend,
                          int centering, long long* fallback_count,
                          gpf_image** out) {
  if (in == nullptr || sp == nullptr || rp == nullptr || out == nullptr) {
    return fail(GPF_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    gpfilter::GpfOptions opts;
    opts.centering = centering != 0;
    gpfilter::FilterResult res = gpfilter::gpf(
        in->img, to_spatial(*sp), to_range(*rp), to_backend(backend), opts);
    if (fallback_count != nullptr) *fallback_count = res.fallback_count;
    deliver(std::move(res.image), out);
  });
}

gpf_status gpf_filter_taylor(const gpf_image* in, const gpf_spatial_params* sp,
                             const gpf_range_params* rp, gpf_backend backend,
                             long long* fallback_count, gpf_image** out) {
  if (in == nullptr || sp == nullptr || rp == nullptr || out == nullptr) {
    return fail(GPF_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    gpfilter::FilterResult res = gpfilter::taylor_bilateral(
        in->img, to_spatial(*sp), to_range(*rp), to_backend(backend));
    if (fallback_count != nullptr) *fallback_count = res.fallback_count;
    deliver(std::move(res.image), out);
  });
}

gpf_status gpf_gaussian_direct(const gpf_image* in,
                               const gpf_spatial_params* sp, gpf_image** out) {
  if (in == nullptr || sp == nullptr || out == nullptr) {
    return fail(GPF_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded(
      [&] { deliver(gpfilter::direct_gaussian(in->img, to_spatial(*sp)), out); });
}

gpf_status gpf_gaussian_recursive(const gpf_image* in, double sigma_s,
                                  double kernel_scale, gpf_image** out) {
  if (in == nullptr || out == nullptr) {
    return fail(GPF_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    deliver(gpfilter::recursive_gaussian(in->img, sigma_s, kernel_scale), out);
  });
}

gpf_status gpf_kernel_gauss(double t, double tau, double sigma_r, double* out) {
  if (out == nullptr) return fail(GPF_ERR_INVALID_ARGUMENT, "out is null");
  return guarded([&] {
    gpfilter::RangeParams p;
    p.sigma_r = sigma_r;
    p.validate();
    *out = gpfilter::gaussian_range(t, tau, p);
  });
}

gpf_status gpf_kernel_gauss_poly(double t, double tau, double sigma_r,
                                 int degree, double* out) {
  if (out == nullptr) return fail(GPF_ERR_INVALID_ARGUMENT, "out is null");
  return guarded([&] {
    gpfilter::RangeParams p;
    p.sigma_r = sigma_r;
    p.degree = degree;
    p.validate();
    *out = gpfilter::gauss_polynomial(t, tau, p);
  });
}

gpf_status gpf_kernel_taylor(double t, double tau, double sigma_r, int degree,
                             double* out) {
  if (out == nullptr) return fail(GPF_ERR_INVALID_ARGUMENT, "out is null");
  return guarded([&] {
    gpfilter::RangeParams p;
    p.sigma_r = sigma_r;
    p.degree = degree;
    p.validate();
    *out = gpfilter::taylor_polynomial(t, tau, p);
  });
}

gpf_status gpf_kernel_sup_error(double sigma_r, int degree, double tau,
                                double low, double high, double step,
                                gpf_range_approx which, double* out) {
  if (out == nullptr) return fail(GPF_ERR_INVALID_ARGUMENT, "out is null");
  return guarded([&] {
    gpfilter::RangeApprox approx;
    switch (which) {
      case GPF_RANGE_APPROX_GAUSS_POLY:
        approx = gpfilter::RangeApprox::gauss_polynomial;
        break;
      case GPF_RANGE_APPROX_TAYLOR:
        approx = gpfilter::RangeApprox::taylor;
        break;
      default:
        throw std::invalid_argument("which must be gauss_poly or taylor");
    }
    gpfilter::RangeParams p;
    p.sigma_r = sigma_r;
    p.degree = degree;
    *out = gpfilter::sup_error(p, tau, gpfilter::IntensityRange{low, high},
                               step, approx);
  });
}

gpf_status gpf_compare(const gpf_image* ref, const gpf_image* test,
                       int exclude_border, gpf_error_report* out) {
  if (ref == nullptr || test == nullptr || out == nullptr) {
    return fail(GPF_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    gpfilter::ErrorReport rep =
        gpfilter::compare(ref->img, test->img, exclude_border);
    out->mse = rep.mse;
    out->mse_db = rep.mse_db;
    out->max_abs = rep.max_abs;
    out->pixels = rep.pixels;
  });
}

gpf_status gpf_set_num_threads(int n) {
  if (n < 1) return fail(GPF_ERR_INVALID_ARGUMENT, "thread count must be >= 1");
  gpfilter::set_num_threads(n);
  return GPF_OK;
}

int gpf_get_num_threads(void) { return gpfilter::num_threads(); }

gpf_status gpf_read_pgm(const char* path, gpf_image** out) {
  if (path == nullptr || out == nullptr) {
    return fail(GPF_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] { deliver(gpfilter::read_pgm(path), out); });
}

gpf_status gpf_decode_pgm(const uint8_t* bytes, size_t size, gpf_image** out) {
  if (bytes == nullptr || out == nullptr) {
    return fail(GPF_ERR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] { deliver(gpfilter::decode_pgm(bytes, size), out); });
}

gpf_status gpf_write_pgm(const gpf_image* img, const char* path) {
  if (img == nullptr || path == nullptr) {
    return fail(GPF_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { gpfilter::write_pgm(img->img, path); });
}

gpf_status gpf_encode_pgm(const gpf_image* img, uint8_t** bytes, size_t* size) {
  if (img == nullptr || bytes == nullptr || size == nullptr) {
    return fail(GPF_ERR_INVALID_ARGUMENT, "null argument");
  }
  *bytes = nullptr;
  *size = 0;
  return guarded([&] {
    const std::vector<std::uint8_t> buf = gpfilter::encode_pgm(img->img);
    auto* mem = new std::uint8_t[buf.size()];
    std::memcpy(mem, buf.data(), buf.size());
    *bytes = mem;
    *size = buf.size();
  });
}

void gpf_free_bytes(uint8_t* bytes) { delete[] bytes; }

}  // extern "C"
