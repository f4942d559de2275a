#pragma once

// Timing harness and the comparison suites behind `longmem bench`.
// Only relative orderings are meaningful; absolute times are machine noise.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "longmem/error.hpp"
#include "longmem/estimate_param.hpp"
#include "longmem/estimate_semiparam.hpp"
#include "longmem/generate.hpp"
#include "longmem/specfun.hpp"

namespace longmem {

struct BenchResult {
  std::string name;
  std::size_t sample_size = 0;
  std::size_t reps = 0;
  double mean_ns = 0.0;
  double median_ns = 0.0;
  double min_ns = 0.0;
};

namespace detail {

// Keeps a result observable so the optimiser cannot drop the timed work.
template <class T> inline void keep(const T &v) {
  asm volatile("" : : "g"(&v) : "memory");
}

} // namespace detail

// Runs `warmup` discarded calls, then `reps` timed calls on the steady clock.
template <class F>
BenchResult time_fn(std::string label, F &&thunk, std::size_t reps, std::size_t warmup = 1,
                    std::size_t sample_size = 0) {
  if (reps == 0)
    throw range_error("time_fn: reps must be at least 1");
  using clock = std::chrono::steady_clock;
  for (std::size_t i = 0; i < warmup; ++i)
    thunk();
  std::vector<double> ns(reps);
  for (std::size_t i = 0; i < reps; ++i) {
    const auto t0 = clock::now();
    thunk();
    const auto t1 = clock::now();
    ns[i] = std::chrono::duration<double, std::nano>(t1 - t0).count();
  }
  BenchResult r;
  r.name = std::move(label);
  r.sample_size = sample_size;
  r.reps = reps;
  r.mean_ns = std::accumulate(ns.begin(), ns.end(), 0.0) / static_cast<double>(reps);
  std::sort(ns.begin(), ns.end());
  r.median_ns = reps % 2 ? ns[reps / 2] : 0.5 * (ns[reps / 2 - 1] + ns[reps / 2]);
  r.min_ns = ns.front();
  return r;
}

// FI(d) MA coefficients by materialising the ratio sequence and taking its
// cumulative product, the vectorised idiom the loop recursion replaces.
inline std::vector<double> fi_ma_coefs_cumprod(std::size_t K, double d) {
  detail::require_count(K);
  std::vector<double> ratio(K);
  ratio[0] = 1.0;
  for (std::size_t k = 1; k < K; ++k)
    ratio[k] = (static_cast<double>(k) - 1.0 + d) / static_cast<double>(k);
  std::vector<double> out(K);
  std::partial_sum(ratio.begin(), ratio.end(), out.begin(), std::multiplies<>());
  return out;
}

// (1-L)^d x by direct summation, O(T^2).
inline std::vector<double> fracdiff_naive(std::span<const double> x, double d) {
  const auto c = detail::fi_ar_values(x.size(), d);
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t t = 0; t < x.size(); ++t) {
    double s = 0.0;
    for (std::size_t k = 0; k <= t; ++k)
      s += c[k] * x[t - k];
    y[t] = s;
  }
  return y;
}

struct SuiteCheck {
  std::string name;
  bool passed = false;
  double value = 0.0; // ratio or deviation behind the verdict
};

struct SuiteReport {
  std::string suite;
  std::size_t n = 0;
  std::vector<BenchResult> results;
  std::vector<SuiteCheck> checks;
};

inline const std::vector<std::string> &bench_suites() {
  static const std::vector<std::string> names{"coef-recursion", "csa-finite-vs-asym",
                                              "fracdiff-fft-vs-naive", "estimators"};
  return names;
}

inline SuiteReport run_bench_suite(const std::string &suite, std::size_t n, std::size_t reps,
                                   std::uint64_t seed = 1234) {
  if (n < 16)
    throw range_error("bench: n must be at least 16");
  if (reps == 0)
    throw range_error("bench: reps must be at least 1");
  SuiteReport rep;
  rep.suite = suite;
  rep.n = n;
  const RngSpec rng{seed};

  if (suite == "coef-recursion") {
    const double d = 0.3;
    auto loop = time_fn("loop recursion", [&] { detail::keep(fi_ma_coefs(n, d)); }, reps, 2, n);
    auto cum = time_fn("cumulative product", [&] { detail::keep(fi_ma_coefs_cumprod(n, d)); },
                       reps, 2, n);
    rep.checks.push_back({"loop mean < cumulative-product mean", loop.mean_ns < cum.mean_ns,
                          cum.mean_ns / loop.mean_ns});
    rep.results = {loop, cum};
  } else if (suite == "csa-finite-vs-asym") {
    const double p = 1.3, q = 1.5;
    auto asym = time_fn("csa_gen", [&] { detail::keep(csa_gen(n, p, q, rng)); }, reps, 1, n);
    auto fin = time_fn("csa_gen_finite", [&] { detail::keep(csa_gen_finite(n, n, p, q, rng)); },
                       reps, 0, n);
    rep.checks.push_back({"finite >= 100x asymptotic", fin.mean_ns >= 100.0 * asym.mean_ns,
                          fin.mean_ns / asym.mean_ns});
    rep.results = {asym, fin};
  } else if (suite == "fracdiff-fft-vs-naive") {
    const double d = 0.4;
    const auto x = fi_gen(n, 0.2, rng).values;
    auto fft = time_fn("fracdiff (FFT)", [&] { detail::keep(fracdiff(x, d)); }, reps, 1, n);
    auto naive = time_fn("fracdiff (naive)", [&] { detail::keep(fracdiff_naive(x, d)); }, reps, 1, n);
    const auto a = fracdiff(x, d).values;
    const auto b = fracdiff_naive(x, d);
    double dev = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      dev = std::max(dev, std::abs(a[i] - b[i]));
    rep.checks.push_back({"FFT mean < naive mean", fft.mean_ns < naive.mean_ns,
                          naive.mean_ns / fft.mean_ns});
    rep.checks.push_back({"outputs agree to 1e-10", dev < 1e-10, dev});
    rep.results = {fft, naive};
  } else if (suite == "estimators") {
    const auto x = fi_gen(n, 0.3, rng).values;
    rep.results.push_back(time_fn("fi_gen", [&] { detail::keep(fi_gen(n, 0.3, rng)); }, reps, 1, n));
    rep.results.push_back(time_fn("gph_est", [&] { detail::keep(gph_est(x)); }, reps, 1, n));
    rep.results.push_back(time_fn("whittle_est", [&] { detail::keep(whittle_est(x)); }, reps, 1, n));
    rep.results.push_back(
        time_fn("exact_whittle_est", [&] { detail::keep(exact_whittle_est(x)); }, reps, 1, n));
    rep.results.push_back(time_fn("fi_mle_est", [&] { detail::keep(fi_mle_est(x)); }, reps, 1, n));
  } else {
    throw domain_error("unknown bench suite '" + suite + "'");
  }
  return rep;
}

} // namespace longmem
