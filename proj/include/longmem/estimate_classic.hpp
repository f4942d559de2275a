#pragma once

// Log-variance and rescaled-range (R/S) estimators. Both fit a line in
// log-log coordinates and map the slope to a memory parameter.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/math/special_functions/digamma.hpp>

#include "longmem/error.hpp"
#include "longmem/regression.hpp"
#include "longmem/series.hpp"

namespace longmem {

enum class ScalingMethod { log_variance, rescaled_range };

struct ScalingRegression {
  std::vector<double> log_sizes;
  std::vector<double> log_stats;
  double slope = 0.0;
  double intercept = 0.0;
  double implied_d = 0.0;
  ScalingMethod method = ScalingMethod::log_variance;
};

namespace detail {

// Up to `count` geometrically spaced integers in [lo, hi], deduplicated.
inline std::vector<std::size_t> geometric_sizes(std::size_t lo, std::size_t hi,
                                                std::size_t count) {
  std::vector<std::size_t> out;
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  const double a = std::log(static_cast<double>(lo));
  const double b = std::log(static_cast<double>(hi));
  for (std::size_t j = 0; j < count; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(count - 1);
    auto n = static_cast<std::size_t>(std::llround(std::exp(a + t * (b - a))));
    n = std::clamp(n, lo, hi);
    if (out.empty() || out.back() != n)
      out.push_back(n);
  }
  return out;
}

inline ScalingRegression finish_scaling(std::vector<double> lx, std::vector<double> ly,
                                        ScalingMethod method) {
  if (lx.size() < 2)
    throw range_error("scaling regression needs at least two distinct sizes");
  const auto line = fit_line(lx, ly);
  ScalingRegression r;
  r.log_sizes = std::move(lx);
  r.log_stats = std::move(ly);
  r.slope = line.slope;
  r.intercept = line.intercept;
  r.method = method;
  r.implied_d = method == ScalingMethod::log_variance ? 0.5 * (line.slope + 1.0)
                                                      : line.slope - 0.5;
  return r;
}

} // namespace detail

// Variance of block means against block size. Block sizes are `m`
// geometrically spaced integers in [10, floor(T/2)]; the slope is 2d - 1.
inline ScalingRegression log_variance_est(std::span<const double> x, std::size_t m) {
  const std::size_t T = x.size();
  if (m < 2 || m > T / 2)
    throw range_error("log_variance_est: m = " + std::to_string(m) +
                      " outside [2, T/2]");
  if (T / 2 < 10)
    throw range_error("log_variance_est: series too short for block sizes >= 10");
  detail::require_finite(x, "log_variance_est");

  const auto sizes = detail::geometric_sizes(10, T / 2, m);
  std::vector<double> lx, ly;
  lx.reserve(sizes.size());
  ly.reserve(sizes.size());
  for (std::size_t n : sizes) {
    const std::size_t blocks = T / n;
    std::vector<double> means(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        s += x[b * n + i];
      means[b] = s / static_cast<double>(n);
    }
    const double mu = detail::mean(means);
    double ss = 0.0;
    for (double v : means)
      ss += (v - mu) * (v - mu);
    const double var = ss / static_cast<double>(blocks - 1);
    if (!(var > 0.0))
      throw degenerate_input_error("log_variance_est: zero variance of block means");
    // With few blocks log(var) is biased low; remove E[log(chi2_k / k)],
    // k = blocks - 1, which is exact for independent Gaussian block means.
    const double h = 0.5 * static_cast<double>(blocks - 1);
    lx.push_back(std::log(static_cast<double>(n)));
    ly.push_back(std::log(var) - (boost::math::digamma(h) - std::log(h)));
  }
  return detail::finish_scaling(std::move(lx), std::move(ly), ScalingMethod::log_variance);
}

// R/S statistic of the first n observations: range of mean-adjusted
// partial sums over the sample standard deviation (divisor n-1).
inline double rescaled_range(std::span<const double> w) {
  const std::size_t n = w.size();
  const double mu = detail::mean(w);
  double partial = 0.0, hi = -INFINITY, lo = INFINITY, ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dev = w[i] - mu;
    partial += dev;
    hi = std::max(hi, partial);
    lo = std::min(lo, partial);
    ss += dev * dev;
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (!(sd > 0.0))
    throw degenerate_input_error("rescaled_range: window has zero standard deviation");
  return (hi - lo) / sd;
}

// Hurst-style R/S analysis over `k` prefix windows with sizes geometrically
// spaced in [10, T]. Returns d = H - 1/2 where H is the log-log slope.
inline ScalingRegression rescaled_range_est(std::span<const double> x, std::size_t k) {
  const std::size_t T = x.size();
  if (k < 4)
    throw range_error("rescaled_range_est: k must be at least 4");
  if (T < 10)
    throw range_error("rescaled_range_est: series shorter than the minimum window");
  detail::require_finite(x, "rescaled_range_est");

  const auto sizes = detail::geometric_sizes(10, T, k);
  std::vector<double> lx, ly;
  for (std::size_t n : sizes) {
    lx.push_back(std::log(static_cast<double>(n)));
    ly.push_back(std::log(rescaled_range(x.first(n))));
  }
  return detail::finish_scaling(std::move(lx), std::move(ly),
                                ScalingMethod::rescaled_range);
}

} // namespace longmem
