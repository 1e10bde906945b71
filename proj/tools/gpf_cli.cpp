// Copyright (c) 2026 gpfilter contributors.
// SPDX-License-Identifier: Apache-2.0
//
// gpf: bilateral filtering of PGM images from the command line. All image
// work goes through the public gpfilter C API.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpfilter/gpfilter.h"

namespace {

// Shortest decimal form that parses back to the same double; integral values
// keep one decimal so CSV columns read unambiguously as reals. snprintf with
// the default C locale guarantees a '.' separator.
std::string fmt_double(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
  char buf[64];
  if (v == std::floor(v) && std::fabs(v) <= 1e9) {
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
  }
  for (int prec = 6; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

// One-line failure naming the flag the problem traces back to.
int fail_flag(const char* flag, const char* detail) {
  std::fprintf(stderr, "error: %s: %s\n", flag, detail);
  return 1;
}

struct ImageHandle {
  gpf_image* ptr = nullptr;
  ~ImageHandle() { gpf_image_destroy(ptr); }
};

gpf_backend parse_backend(const std::string& s) {
  return s == "direct" ? GPF_BACKEND_DIRECT : GPF_BACKEND_RECURSIVE;
}

gpf_boundary parse_boundary(const std::string& s) {
  if (s == "reflect") return GPF_BOUNDARY_REFLECT;
  if (s == "zero") return GPF_BOUNDARY_ZERO;
  return GPF_BOUNDARY_REPLICATE;
}

struct FilterArgs {
  std::string input;
  std::string output;
  std::string method;
  double sigma_s = 0.0;
  double sigma_r = 0.0;
  int degree = 20;
  std::string backend = "recursive";
  int window = 0;  // 0: auto, ceil(3 * sigma_s)
  std::string boundary = "replicate";
  bool no_centering = false;
  int threads = 1;
};

int run_filter(const FilterArgs& a) {
  if (gpf_set_num_threads(a.threads) != GPF_OK) {
    return fail_flag("--threads", gpf_last_error());
  }
  ImageHandle in;
  if (gpf_read_pgm(a.input.c_str(), &in.ptr) != GPF_OK) {
    return fail_flag("--input", gpf_last_error());
  }

  gpf_spatial_params sp;
  gpf_spatial_params_init(&sp);
  sp.sigma_s = a.sigma_s;
  sp.window_radius = a.window;
  sp.boundary = parse_boundary(a.boundary);
  gpf_range_params rp;
  gpf_range_params_init(&rp);
  rp.sigma_r = a.sigma_r;
  rp.degree = a.degree;

  ImageHandle out;
  long long fallback = 0;
  gpf_status st;
  if (a.method == "exact") {
    st = gpf_filter_exact(in.ptr, &sp, &rp, &out.ptr);
  } else if (a.method == "gpf") {
    st = gpf_filter_gpf(in.ptr, &sp, &rp, parse_backend(a.backend),
                        a.no_centering ? 0 : 1, &fallback, &out.ptr);
  } else {
    st = gpf_filter_taylor(in.ptr, &sp, &rp, parse_backend(a.backend),
                           &fallback, &out.ptr);
  }
  if (st == GPF_ERR_SIGMA_TOO_SMALL) {
    return fail_flag("--sigma-s", gpf_last_error());
  }
  if (st != GPF_OK) {
    return fail_flag("--method", gpf_last_error());
  }

  if (gpf_write_pgm(out.ptr, a.output.c_str()) != GPF_OK) {
    return fail_flag("--output", gpf_last_error());
  }
  if (fallback > 0) {
    std::fprintf(stderr, "fallback pixels: %lld\n", fallback);
  }
  return 0;
}

struct CompareArgs {
  std::string ref;
  std::string test;
  int exclude_border = 0;
};

int run_compare(const CompareArgs& a) {
  ImageHandle ref;
  if (gpf_read_pgm(a.ref.c_str(), &ref.ptr) != GPF_OK) {
    return fail_flag("--ref", gpf_last_error());
  }
  ImageHandle test;
  if (gpf_read_pgm(a.test.c_str(), &test.ptr) != GPF_OK) {
    return fail_flag("--test", gpf_last_error());
  }
  gpf_error_report rep;
  if (gpf_compare(ref.ptr, test.ptr, a.exclude_border, &rep) != GPF_OK) {
    return fail_flag("--test", gpf_last_error());
  }
  std::printf("mse=%s mse_db=%s max_abs=%s pixels=%lld\n",
              fmt_double(rep.mse).c_str(), fmt_double(rep.mse_db).c_str(),
              fmt_double(rep.max_abs).c_str(), rep.pixels);
  return 0;
}

struct KernelErrorArgs {
  double sigma_r = 0.0;
  int degree = 0;
  std::vector<double> taus;
  std::string range;
  double step = 0.0;
  std::string which;
  std::string csv;
};

bool parse_interval(const std::string& s, double* lo, double* hi) {
  const std::size_t colon = s.find(':');
  if (colon == std::string::npos) return false;
  char* end = nullptr;
  *lo = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + colon) return false;
  *hi = std::strtod(s.c_str() + colon + 1, &end);
  return end == s.c_str() + s.size() && *lo < *hi;
}

int run_kernel_error(const KernelErrorArgs& a) {
  double lo = 0.0;
  double hi = 0.0;
  if (!parse_interval(a.range, &lo, &hi)) {
    return fail_flag("--range", "expected LO:HI with LO < HI");
  }

  std::ofstream csv(a.csv, std::ios::trunc);
  if (!csv) return fail_flag("--csv", "cannot open for writing");
  csv << "tau,approx,sup_error\n";

  std::vector<gpf_range_approx> which;
  if (a.which == "gp" || a.which == "both") {
    which.push_back(GPF_RANGE_APPROX_GAUSS_POLY);
  }
  if (a.which == "taylor" || a.which == "both") {
    which.push_back(GPF_RANGE_APPROX_TAYLOR);
  }

  for (const double tau : a.taus) {
    for (const gpf_range_approx approx : which) {
      double sup = 0.0;
      if (gpf_kernel_sup_error(a.sigma_r, a.degree, tau, lo, hi, a.step,
                               approx, &sup) != GPF_OK) {
        return fail_flag("--range", gpf_last_error());
      }
      csv << fmt_double(tau) << ','
          << (approx == GPF_RANGE_APPROX_GAUSS_POLY ? "gp" : "taylor") << ','
          << fmt_double(sup) << '\n';
    }
  }
  csv.flush();
  if (!csv) return fail_flag("--csv", "write failure");
  return 0;
}

struct BenchArgs {
  std::string input;
  std::vector<std::string> methods;
  std::vector<double> sigma_s_list;
  double sigma_r = 0.0;
  int degree = 0;
  std::string backend;
  int repeats = 5;
  int warmup = 1;
  std::string csv;
  int threads = 1;
};

int run_bench(const BenchArgs& a) {
  if (gpf_set_num_threads(a.threads) != GPF_OK) {
    return fail_flag("--threads", gpf_last_error());
  }
  ImageHandle in;
  if (gpf_read_pgm(a.input.c_str(), &in.ptr) != GPF_OK) {
    return fail_flag("--input", gpf_last_error());
  }
  const long long pixels = static_cast<long long>(gpf_image_width(in.ptr)) *
                           gpf_image_height(in.ptr);

  std::ofstream csv(a.csv, std::ios::trunc);
  if (!csv) return fail_flag("--csv", "cannot open for writing");
  csv << "method,backend,sigma_s,sigma_r,degree,pixels,repeats,"
         "median_seconds\n";

  const gpf_backend backend = parse_backend(a.backend);
  gpf_range_params rp;
  rp.sigma_r = a.sigma_r;
  rp.degree = a.degree;

  for (const std::string& method : a.methods) {
    for (const double sigma_s : a.sigma_s_list) {
      gpf_spatial_params sp;
      gpf_spatial_params_init(&sp);
      sp.sigma_s = sigma_s;

      // One filtering run; only the filter call is inside the clock.
      const auto run_once = [&](double* seconds) -> gpf_status {
        ImageHandle out;
        gpf_status st;
        const auto t0 = std::chrono::steady_clock::now();
        if (method == "exact") {
          st = gpf_filter_exact(in.ptr, &sp, &rp, &out.ptr);
        } else if (method == "gpf") {
          st = gpf_filter_gpf(in.ptr, &sp, &rp, backend, 1, nullptr,
                              &out.ptr);
        } else {
          st = gpf_filter_taylor(in.ptr, &sp, &rp, backend, nullptr,
                                 &out.ptr);
        }
        const auto t1 = std::chrono::steady_clock::now();
        *seconds = std::chrono::duration<double>(t1 - t0).count();
        return st;
      };

      std::vector<double> times;
      times.reserve(a.repeats);
      for (int i = 0; i < a.warmup + a.repeats; ++i) {
        double seconds = 0.0;
        const gpf_status st = run_once(&seconds);
        if (st == GPF_ERR_SIGMA_TOO_SMALL) {
          return fail_flag("--sigma-s-list", gpf_last_error());
        }
        if (st != GPF_OK) return fail_flag("--method", gpf_last_error());
        if (i >= a.warmup) times.push_back(seconds);
      }
      std::sort(times.begin(), times.end());
      const std::size_t n = times.size();
      const double median = n % 2 == 1
                                ? times[n / 2]
                                : 0.5 * (times[n / 2 - 1] + times[n / 2]);

      csv << method << ',' << a.backend << ',' << fmt_double(sigma_s) << ','
          << fmt_double(a.sigma_r) << ',' << a.degree << ',' << pixels << ','
          << a.repeats << ',' << fmt_double(median) << '\n';
    }
  }
  csv.flush();
  if (!csv) return fail_flag("--csv", "write failure");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bilateral filtering of grayscale PGM images with a "
               "constant-time Gauss-polynomial approximation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gpf_version());

  FilterArgs f;
  CLI::App* filter = app.add_subcommand("filter", "Filter an image");
  filter->add_option("--input", f.input, "Input PGM path")->required();
  filter->add_option("--output", f.output, "Output PGM path")->required();
  filter
      ->add_option("--method", f.method,
                   "Filter: exact (brute force), gpf (Gauss-polynomial), "
                   "taylor (Taylor baseline)")
      ->required()
      ->check(CLI::IsMember({"exact", "gpf", "taylor"}));
  filter->add_option("--sigma-s", f.sigma_s, "Spatial sigma")
      ->required()
      ->check(CLI::PositiveNumber);
  filter->add_option("--sigma-r", f.sigma_r, "Range sigma")
      ->required()
      ->check(CLI::PositiveNumber);
  filter->add_option("--degree", f.degree, "Polynomial degree N")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  filter
      ->add_option("--backend", f.backend,
                   "Spatial backend for gpf/taylor")
      ->capture_default_str()
      ->check(CLI::IsMember({"direct", "recursive"}));
  filter
      ->add_option("--window", f.window,
                   "Window radius for exact/direct (default ceil(3*sigma-s))")
      ->check(CLI::PositiveNumber);
  filter->add_option("--boundary", f.boundary, "Boundary rule")
      ->capture_default_str()
      ->check(CLI::IsMember({"replicate", "reflect", "zero"}));
  filter->add_flag("--no-centering", f.no_centering,
                   "Skip intensity centering in the gpf method");
  filter->add_option("--threads", f.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  CompareArgs c;
  CLI::App* compare = app.add_subcommand("compare", "Compare two images");
  compare->add_option("--ref", c.ref, "Reference PGM path")->required();
  compare->add_option("--test", c.test, "Test PGM path")->required();
  compare
      ->add_option("--exclude-border", c.exclude_border,
                   "Pixels to ignore on every edge")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  KernelErrorArgs k;
  CLI::App* kernel = app.add_subcommand(
      "kernel-error", "Tabulate range-kernel approximation error");
  kernel->add_option("--sigma-r", k.sigma_r, "Range sigma")
      ->required()
      ->check(CLI::PositiveNumber);
  kernel->add_option("--degree", k.degree, "Polynomial degree N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  kernel->add_option("--tau-list", k.taus, "Comma-separated tau values")
      ->required()
      ->delimiter(',');
  kernel->add_option("--range", k.range, "Sweep interval LO:HI")->required();
  kernel->add_option("--step", k.step, "Sweep step")
      ->required()
      ->check(CLI::PositiveNumber);
  kernel->add_option("--which", k.which, "Approximation(s) to evaluate")
      ->required()
      ->check(CLI::IsMember({"gp", "taylor", "both"}));
  kernel->add_option("--csv", k.csv, "Output CSV path")->required();

  BenchArgs b;
  CLI::App* bench = app.add_subcommand("bench", "Time filters over sigma-s");
  bench->add_option("--input", b.input, "Input PGM path")->required();
  bench->add_option("--method", b.methods, "Comma-separated method list")
      ->required()
      ->delimiter(',')
      ->check(CLI::IsMember({"exact", "gpf", "taylor"}));
  bench
      ->add_option("--sigma-s-list", b.sigma_s_list,
                   "Comma-separated sigma-s values")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--sigma-r", b.sigma_r, "Range sigma")
      ->required()
      ->check(CLI::PositiveNumber);
  bench->add_option("--degree", b.degree, "Polynomial degree N")
      ->required()
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--backend", b.backend, "Spatial backend for gpf/taylor")
      ->required()
      ->check(CLI::IsMember({"direct", "recursive"}));
  bench->add_option("--repeats", b.repeats, "Timed runs per configuration")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--warmup", b.warmup, "Discarded runs per configuration")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--csv", b.csv, "Output CSV path")->required();
  bench->add_option("--threads", b.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (filter->parsed()) return run_filter(f);
  if (compare->parsed()) return run_compare(c);
  if (kernel->parsed()) return run_kernel_error(k);
  return run_bench(b);
}
