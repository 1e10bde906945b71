/* Copyright (c) 2026 gpfilter contributors. */
/* SPDX-License-Identifier: Apache-2.0 */

#ifndef GPFILTER_GPFILTER_H
#define GPFILTER_GPFILTER_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* ------------------------------------------------------------------ */
/* Status codes                                                        */
/* ------------------------------------------------------------------ */

typedef enum gpf_status {
  GPF_OK = 0,
  GPF_ERR_INVALID_ARGUMENT = 1, /* bad parameter value or null pointer */
  GPF_ERR_IO = 2,               /* file could not be read or written */
  GPF_ERR_SIGMA_TOO_SMALL = 3,  /* recursive backend needs sigma_s >= 0.5 */
  GPF_ERR_PGM_BAD_MAGIC = 4,
  GPF_ERR_PGM_BAD_DIMS = 5,
  GPF_ERR_PGM_BAD_MAXVAL = 6,
  GPF_ERR_PGM_TRUNCATED = 7,
  GPF_ERR_PGM_BAD_PIXEL = 8,
  GPF_ERR_UNKNOWN = 9
} gpf_status;

/* Stable identifier for a status code, e.g. "GPF_ERR_IO". */
const char* gpf_status_name(gpf_status status);

/* Human-readable detail for the most recent failure on this thread, or an
 * empty string. The buffer is overwritten by the next failing call. */
const char* gpf_last_error(void);

/* Library version, "major.minor.patch". */
const char* gpf_version(void);

/* ------------------------------------------------------------------ */
/* Images                                                              */
/* ------------------------------------------------------------------ */

/* Opaque row-major grid of width*height double samples. */
typedef struct gpf_image gpf_image;

/* Allocates a zero-filled image; both dimensions must be >= 1. */
gpf_status gpf_image_create(int width, int height, gpf_image** out);
void gpf_image_destroy(gpf_image* img);

int gpf_image_width(const gpf_image* img);
int gpf_image_height(const gpf_image* img);

/* Direct access to the sample buffer (width*height doubles, row-major).
 * Returns NULL for a NULL image. */
double* gpf_image_data(gpf_image* img);
const double* gpf_image_cdata(const gpf_image* img);

/* ------------------------------------------------------------------ */
/* Parameters                                                          */
/* ------------------------------------------------------------------ */

typedef enum gpf_boundary {
  GPF_BOUNDARY_REPLICATE = 0, /* clamp to the nearest edge sample */
  GPF_BOUNDARY_REFLECT = 1,   /* mirror about the edge between samples */
  GPF_BOUNDARY_ZERO = 2       /* samples outside contribute nothing */
} gpf_boundary;

typedef enum gpf_backend {
  GPF_BACKEND_DIRECT = 0,   /* windowed convolution, cost grows with sigma_s */
  GPF_BACKEND_RECURSIVE = 1 /* fixed-cost IIR approximation, sigma_s >= 0.5 */
} gpf_backend;

typedef struct gpf_spatial_params {
  double sigma_s;      /* spatial standard deviation, > 0 */
  int window_radius;   /* direct-backend taps; <= 0 selects ceil(3*sigma_s) */
  gpf_boundary boundary;
  double kernel_scale; /* multiplies the kernel, > 0; 1.0 is the plain kernel */
} gpf_spatial_params;

typedef struct gpf_range_params {
  double sigma_r; /* range standard deviation, > 0 */
  int degree;     /* polynomial degree N, >= 0 */
} gpf_range_params;

/* Fill with defaults: sigma_s 2, auto window, replicate, scale 1 /
 * sigma_r 30, degree 20. */
void gpf_spatial_params_init(gpf_spatial_params* sp);
void gpf_range_params_init(gpf_range_params* rp);

/* ------------------------------------------------------------------ */
/* Filters                                                             */
/* ------------------------------------------------------------------ */

/* Brute-force bilateral filter over the (2W+1)^2 window. */
gpf_status gpf_filter_exact(const gpf_image* in, const gpf_spatial_params* sp,
                            const gpf_range_params* rp, gpf_image** out);

/* Constant-time Gauss-polynomial bilateral filter. centering != 0 subtracts
 * the mean intensity before filtering and restores it afterwards. Pixels
 * whose denominator magnitude falls to 1e-8 or below keep their input value;
 * fallback_count (may be NULL) receives how many did. */
gpf_status gpf_filter_gpf(const gpf_image* in, const gpf_spatial_params* sp,
                          const gpf_range_params* rp, gpf_backend backend,
                          int centering, long long* fallback_count,
                          gpf_image** out);

/* Taylor-polynomial baseline of degree rp->degree (truncation order
 * K = degree / 2). Same fallback rule and counter as gpf_filter_gpf. */
gpf_status gpf_filter_taylor(const gpf_image* in, const gpf_spatial_params* sp,
                             const gpf_range_params* rp, gpf_backend backend,
                             long long* fallback_count, gpf_image** out);

/* Spatial Gaussian smoothing alone. */
gpf_status gpf_gaussian_direct(const gpf_image* in,
                               const gpf_spatial_params* sp, gpf_image** out);
gpf_status gpf_gaussian_recursive(const gpf_image* in, double sigma_s,
                                  double kernel_scale, gpf_image** out);

/* ------------------------------------------------------------------ */
/* Range-kernel evaluation                                             */
/* ------------------------------------------------------------------ */

typedef enum gpf_range_approx {
  GPF_RANGE_APPROX_GAUSS_POLY = 0,
  GPF_RANGE_APPROX_TAYLOR = 1
} gpf_range_approx;

/* Exact Gaussian range kernel exp(-(t - tau)^2 / (2 sigma_r^2)). */
gpf_status gpf_kernel_gauss(double t, double tau, double sigma_r, double* out);

/* Degree-N approximations of the same kernel. */
gpf_status gpf_kernel_gauss_poly(double t, double tau, double sigma_r,
                                 int degree, double* out);
gpf_status gpf_kernel_taylor(double t, double tau, double sigma_r, int degree,
                             double* out);

/* sup over t in [low, high] (stepped by `step`, endpoint included) of the
 * absolute error of the chosen approximation against the exact kernel. */
gpf_status gpf_kernel_sup_error(double sigma_r, int degree, double tau,
                                double low, double high, double step,
                                gpf_range_approx which, double* out);

/* ------------------------------------------------------------------ */
/* Metrics                                                             */
/* ------------------------------------------------------------------ */

typedef struct gpf_error_report {
  double mse;
  double mse_db; /* 10*log10(mse); -400 when mse == 0 */
  double max_abs;
  long long pixels; /* samples compared */
} gpf_error_report;

/* Error statistics between equally sized images, optionally ignoring
 * exclude_border pixels on every edge. */
gpf_status gpf_compare(const gpf_image* ref, const gpf_image* test,
                       int exclude_border, gpf_error_report* out);

/* ------------------------------------------------------------------ */
/* Threading                                                           */
/* ------------------------------------------------------------------ */

/* Worker threads used by the filters (>= 1). Results are bitwise identical
 * for every thread count. Default 1. */
gpf_status gpf_set_num_threads(int n);
int gpf_get_num_threads(void);

/* ------------------------------------------------------------------ */
/* PGM I/O                                                             */
/* ------------------------------------------------------------------ */

/* Reads a binary (P5) or ASCII (P2) PGM. Parse failures return one of the
 * GPF_ERR_PGM_* codes; gpf_last_error() then names the byte offset. */
gpf_status gpf_read_pgm(const char* path, gpf_image** out);
gpf_status gpf_decode_pgm(const uint8_t* bytes, size_t size, gpf_image** out);

/* Writes the canonical form "P5\n<w> <h>\n255\n" with samples clamped to
 * [0, 255] and rounded half away from zero. */
gpf_status gpf_write_pgm(const gpf_image* img, const char* path);
gpf_status gpf_encode_pgm(const gpf_image* img, uint8_t** bytes, size_t* size);

/* Releases a buffer returned by gpf_encode_pgm. */
void gpf_free_bytes(uint8_t* bytes);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GPFILTER_GPFILTER_H */
