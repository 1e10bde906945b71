// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0

#include "gpfilter/gpfilter.h"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "core/range_kernel.hpp"
#include "doctest.h"
#include "noise.hpp"

namespace {

// Owns a gpf_image for the duration of a test block.
struct Handle {
  gpf_image* ptr = nullptr;
  ~Handle() { gpf_image_destroy(ptr); }
  gpf_image** out() { return &ptr; }
};

gpf_status decode_str(const std::string& head,
                      const std::vector<std::uint8_t>& raster,
                      gpf_image** out) {
  std::vector<std::uint8_t> buf(head.begin(), head.end());
  buf.insert(buf.end(), raster.begin(), raster.end());
  return gpf_decode_pgm(buf.data(), buf.size(), out);
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(gpf_version()) == "1.0.0");
  CHECK(std::string(gpf_status_name(GPF_OK)) == "GPF_OK");
  CHECK(std::string(gpf_status_name(GPF_ERR_INVALID_ARGUMENT)) ==
        "GPF_ERR_INVALID_ARGUMENT");
  CHECK(std::string(gpf_status_name(GPF_ERR_SIGMA_TOO_SMALL)) ==
        "GPF_ERR_SIGMA_TOO_SMALL");
  CHECK(std::string(gpf_status_name(GPF_ERR_PGM_TRUNCATED)) ==
        "GPF_ERR_PGM_TRUNCATED");
}

TEST_CASE("image lifecycle and buffer access") {
  Handle img;
  REQUIRE(gpf_image_create(3, 2, img.out()) == GPF_OK);
  CHECK(gpf_image_width(img.ptr) == 3);
  CHECK(gpf_image_height(img.ptr) == 2);
  double* d = gpf_image_data(img.ptr);
  REQUIRE(d != nullptr);
  for (int i = 0; i < 6; ++i) CHECK(d[i] == 0.0);
  d[4] = 17.5;
  CHECK(gpf_image_cdata(img.ptr)[4] == 17.5);

  CHECK(gpf_image_data(nullptr) == nullptr);
  CHECK(gpf_image_width(nullptr) == 0);
  gpf_image_destroy(nullptr);  // must be a no-op
}

TEST_CASE("invalid creation reports a detail message") {
  gpf_image* img = reinterpret_cast<gpf_image*>(0x1);
  CHECK(gpf_image_create(0, 5, &img) == GPF_ERR_INVALID_ARGUMENT);
  CHECK(img == nullptr);
  CHECK(std::string(gpf_last_error()).size() > 0);
  CHECK(gpf_image_create(4, 4, nullptr) == GPF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("parameter defaults") {
  gpf_spatial_params sp;
  gpf_range_params rp;
  gpf_spatial_params_init(&sp);
  gpf_range_params_init(&rp);
  CHECK(sp.sigma_s == 2.0);
  CHECK(sp.window_radius <= 0);
  CHECK(sp.boundary == GPF_BOUNDARY_REPLICATE);
  CHECK(sp.kernel_scale == 1.0);
  CHECK(rp.sigma_r == 30.0);
  CHECK(rp.degree == 20);
}

TEST_CASE("filters run end to end through the C interface") {
  gpf_spatial_params sp;
  gpf_range_params rp;
  gpf_spatial_params_init(&sp);
  gpf_range_params_init(&rp);

  Handle in;
  REQUIRE(gpf_image_create(16, 16, in.out()) == GPF_OK);
  double* d = gpf_image_data(in.ptr);
  for (int i = 0; i < 256; ++i) d[i] = 42.0;

  SUBCASE("exact keeps a constant image") {
    Handle out;
    REQUIRE(gpf_filter_exact(in.ptr, &sp, &rp, out.out()) == GPF_OK);
    const double* o = gpf_image_cdata(out.ptr);
    for (int i = 0; i < 256; ++i) CHECK(o[i] == 42.0);
  }

  SUBCASE("gpf keeps a constant image and reports zero fallbacks") {
    Handle out;
    long long fallbacks = -1;
    REQUIRE(gpf_filter_gpf(in.ptr, &sp, &rp, GPF_BACKEND_RECURSIVE, 1,
                           &fallbacks, out.out()) == GPF_OK);
    CHECK(fallbacks == 0);
    const double* o = gpf_image_cdata(out.ptr);
    for (int i = 0; i < 256; ++i) CHECK(o[i] == 42.0);

    // The fallback counter is optional.
    Handle out2;
    CHECK(gpf_filter_gpf(in.ptr, &sp, &rp, GPF_BACKEND_DIRECT, 0, nullptr,
                         out2.out()) == GPF_OK);
  }

  SUBCASE("taylor runs and reports fallbacks") {
    Handle out;
    long long fallbacks = -1;
    REQUIRE(gpf_filter_taylor(in.ptr, &sp, &rp, GPF_BACKEND_DIRECT, &fallbacks,
                              out.out()) == GPF_OK);
    CHECK(fallbacks == 0);
    CHECK(gpf_image_cdata(out.ptr)[40] == doctest::Approx(42.0).epsilon(1e-9));
  }

  SUBCASE("bad enum values are rejected") {
    Handle out;
    CHECK(gpf_filter_gpf(in.ptr, &sp, &rp, static_cast<gpf_backend>(7), 1,
                         nullptr, out.out()) == GPF_ERR_INVALID_ARGUMENT);
    sp.boundary = static_cast<gpf_boundary>(9);
    CHECK(gpf_filter_exact(in.ptr, &sp, &rp, out.out()) ==
          GPF_ERR_INVALID_ARGUMENT);
  }

  SUBCASE("parameter validation surfaces as a status") {
    Handle out;
    sp.sigma_s = -1.0;
    CHECK(gpf_filter_exact(in.ptr, &sp, &rp, out.out()) ==
          GPF_ERR_INVALID_ARGUMENT);
    CHECK(std::string(gpf_last_error()).find("sigma_s") != std::string::npos);
  }

  SUBCASE("null arguments are rejected") {
    Handle out;
    CHECK(gpf_filter_exact(nullptr, &sp, &rp, out.out()) ==
          GPF_ERR_INVALID_ARGUMENT);
    CHECK(gpf_filter_exact(in.ptr, nullptr, &rp, out.out()) ==
          GPF_ERR_INVALID_ARGUMENT);
    CHECK(gpf_filter_exact(in.ptr, &sp, &rp, nullptr) ==
          GPF_ERR_INVALID_ARGUMENT);
  }
}

TEST_CASE("recursive backend rejects tiny sigma with a dedicated status") {
  Handle in;
  REQUIRE(gpf_image_create(8, 8, in.out()) == GPF_OK);
  Handle out;
  CHECK(gpf_gaussian_recursive(in.ptr, 0.3, 1.0, out.out()) ==
        GPF_ERR_SIGMA_TOO_SMALL);
  CHECK(std::string(gpf_last_error()).find("direct") != std::string::npos);
  CHECK(gpf_gaussian_recursive(in.ptr, 2.0, 1.0, out.out()) == GPF_OK);
}

TEST_CASE("spatial smoothing through the C interface") {
  Handle in;
  REQUIRE(gpf_image_create(12, 10, in.out()) == GPF_OK);
  double* d = gpf_image_data(in.ptr);
  for (int i = 0; i < 120; ++i) d[i] = 5.0;

  gpf_spatial_params sp;
  gpf_spatial_params_init(&sp);
  Handle out;
  REQUIRE(gpf_gaussian_direct(in.ptr, &sp, out.out()) == GPF_OK);
  CHECK(gpf_image_width(out.ptr) == 12);
  CHECK(gpf_image_height(out.ptr) == 10);
  // With replicate boundary a constant input stays constant, scaled by the
  // squared 1-D kernel mass (the convolution is not normalized).
  double mass = 0.0;
  for (int k = -6; k <= 6; ++k) mass += std::exp(-k * k / 8.0);
  CHECK(gpf_image_cdata(out.ptr)[0] ==
        doctest::Approx(5.0 * mass * mass).epsilon(1e-12));
}

TEST_CASE("kernel evaluation matches the native routines bitwise") {
  gpfilter::RangeParams p;
  p.sigma_r = 30.0;
  p.degree = 12;

  double v = 0.0;
  REQUIRE(gpf_kernel_gauss(100.0, 40.0, 30.0, &v) == GPF_OK);
  CHECK(v == gpfilter::gaussian_range(100.0, 40.0, p));

  REQUIRE(gpf_kernel_gauss_poly(100.0, 40.0, 30.0, 12, &v) == GPF_OK);
  CHECK(v == gpfilter::gauss_polynomial(100.0, 40.0, p));

  REQUIRE(gpf_kernel_taylor(100.0, 40.0, 30.0, 12, &v) == GPF_OK);
  CHECK(v == gpfilter::taylor_polynomial(100.0, 40.0, p));

  double sup = 0.0;
  REQUIRE(gpf_kernel_sup_error(30.0, 12, 40.0, 0.0, 255.0, 1.0,
                               GPF_RANGE_APPROX_GAUSS_POLY, &sup) == GPF_OK);
  CHECK(sup == gpfilter::sup_error(p, 40.0, {0.0, 255.0}, 1.0,
                                   gpfilter::RangeApprox::gauss_polynomial));

  CHECK(gpf_kernel_gauss(1.0, 2.0, 0.0, &v) == GPF_ERR_INVALID_ARGUMENT);
  CHECK(gpf_kernel_sup_error(30.0, 12, 40.0, 255.0, 0.0, 1.0,
                             GPF_RANGE_APPROX_TAYLOR, &sup) ==
        GPF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("compare reports and validates through the C interface") {
  Handle a;
  Handle b;
  REQUIRE(gpf_image_create(4, 4, a.out()) == GPF_OK);
  REQUIRE(gpf_image_create(4, 4, b.out()) == GPF_OK);
  gpf_image_data(b.ptr)[5] = 2.0;

  gpf_error_report rep;
  REQUIRE(gpf_compare(a.ptr, b.ptr, 0, &rep) == GPF_OK);
  CHECK(rep.pixels == 16);
  CHECK(rep.max_abs == 2.0);
  CHECK(rep.mse == doctest::Approx(4.0 / 16.0));

  Handle c;
  REQUIRE(gpf_image_create(5, 4, c.out()) == GPF_OK);
  CHECK(gpf_compare(a.ptr, c.ptr, 0, &rep) == GPF_ERR_INVALID_ARGUMENT);
  CHECK(gpf_compare(a.ptr, b.ptr, 0, nullptr) == GPF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("PGM decode failures map to distinct status codes") {
  Handle img;
  CHECK(decode_str("P6\n1 1\n255\nx", {}, img.out()) == GPF_ERR_PGM_BAD_MAGIC);
  CHECK(img.ptr == nullptr);
  CHECK(decode_str("P5\n0 2\n255\n", {}, img.out()) == GPF_ERR_PGM_BAD_DIMS);
  CHECK(decode_str("P5\n2 2\n254\n", {0, 0, 0, 0}, img.out()) ==
        GPF_ERR_PGM_BAD_MAXVAL);
  CHECK(decode_str("P5\n2 2\n255\n", {1, 2, 3}, img.out()) ==
        GPF_ERR_PGM_TRUNCATED);
  CHECK(decode_str("P2\n2 1\n255\n12 256\n", {}, img.out()) ==
        GPF_ERR_PGM_BAD_PIXEL);
  CHECK(std::string(gpf_last_error()).find("byte") != std::string::npos);

  CHECK(decode_str("P5\n2 1\n255\n", {7, 9}, img.out()) == GPF_OK);
  CHECK(gpf_image_cdata(img.ptr)[1] == 9.0);
}

TEST_CASE("PGM encode produces the canonical bytes") {
  Handle img;
  REQUIRE(gpf_image_create(2, 1, img.out()) == GPF_OK);
  gpf_image_data(img.ptr)[0] = 0.4;
  gpf_image_data(img.ptr)[1] = 254.6;

  uint8_t* bytes = nullptr;
  size_t size = 0;
  REQUIRE(gpf_encode_pgm(img.ptr, &bytes, &size) == GPF_OK);
  const std::string expect = "P5\n2 1\n255\n";
  REQUIRE(size == expect.size() + 2);
  CHECK(std::memcmp(bytes, expect.data(), expect.size()) == 0);
  CHECK(bytes[expect.size()] == 0);
  CHECK(bytes[expect.size() + 1] == 255);
  gpf_free_bytes(bytes);
}

TEST_CASE("PGM file round-trip and IO failures") {
  Handle img;
  REQUIRE(gpf_image_create(3, 3, img.out()) == GPF_OK);
  for (int i = 0; i < 9; ++i) gpf_image_data(img.ptr)[i] = i * 20.0;

  const char* path = "capi_roundtrip_tmp.pgm";
  REQUIRE(gpf_write_pgm(img.ptr, path) == GPF_OK);
  Handle back;
  REQUIRE(gpf_read_pgm(path, back.out()) == GPF_OK);
  for (int i = 0; i < 9; ++i) {
    CHECK(gpf_image_cdata(back.ptr)[i] == i * 20.0);
  }
  std::remove(path);

  Handle missing;
  CHECK(gpf_read_pgm("no_such_file_here.pgm", missing.out()) == GPF_ERR_IO);
  CHECK(gpf_read_pgm(nullptr, missing.out()) == GPF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("thread count plumbing") {
  CHECK(gpf_get_num_threads() == 1);
  CHECK(gpf_set_num_threads(0) == GPF_ERR_INVALID_ARGUMENT);
  CHECK(gpf_get_num_threads() == 1);
  CHECK(gpf_set_num_threads(4) == GPF_OK);
  CHECK(gpf_get_num_threads() == 4);

  // Same pixels regardless of the worker count.
  const std::vector<double> noise = testsupport::gauss_noise_image(77, 24, 24);
  Handle in;
  REQUIRE(gpf_image_create(24, 24, in.out()) == GPF_OK);
  for (std::size_t i = 0; i < noise.size(); ++i) {
    gpf_image_data(in.ptr)[i] = noise[i];
  }
  gpf_spatial_params sp;
  gpf_range_params rp;
  gpf_spatial_params_init(&sp);
  gpf_range_params_init(&rp);

  Handle multi;
  REQUIRE(gpf_filter_gpf(in.ptr, &sp, &rp, GPF_BACKEND_RECURSIVE, 1, nullptr,
                         multi.out()) == GPF_OK);
  CHECK(gpf_set_num_threads(1) == GPF_OK);
  Handle single;
  REQUIRE(gpf_filter_gpf(in.ptr, &sp, &rp, GPF_BACKEND_RECURSIVE, 1, nullptr,
                         single.out()) == GPF_OK);
  for (std::size_t i = 0; i < noise.size(); ++i) {
    CHECK(gpf_image_cdata(multi.ptr)[i] == gpf_image_cdata(single.ptr)[i]);
  }
}
