#pragma once

// Sample and theoretical second moments: autocovariance, autocorrelation,
// periodogram, and the closed forms for FI(d) and aggregated AR(1) processes.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "longmem/error.hpp"
#include "longmem/fft.hpp"
#include "longmem/series.hpp"
#include "longmem/specfun.hpp"

namespace longmem {

enum class AcfKind { sample, theoretical_fi, theoretical_csa };

struct AcfResult {
  std::vector<std::size_t> lags;
  std::vector<double> values;
  AcfKind kind;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t k) const { return values[k]; }
};

struct Periodogram {
  std::vector<double> frequencies; // lambda_k = 2 pi k / T, k = 1..floor(T/2)
  std::vector<double> ordinates;   // |DFT|^2 / (2 pi T)

  std::size_t size() const noexcept { return ordinates.size(); }
};

namespace detail {

inline std::vector<std::size_t> iota_lags(std::size_t K) {
  std::vector<std::size_t> l(K);
  for (std::size_t k = 0; k < K; ++k)
    l[k] = k;
  return l;
}

} // namespace detail

// Biased sample autocovariance (divisor T) at lags 0..K-1, via FFT.
inline std::vector<double> autocovariance(std::span<const double> x, std::size_t K) {
  const std::size_t T = x.size();
  if (K == 0)
    throw empty_request_error("autocovariance: K = 0");
  if (K > T)
    throw range_error("autocovariance: K = " + std::to_string(K) +
                      " exceeds series length " + std::to_string(T));
  detail::require_finite(x, "autocovariance");
  const double xbar = detail::mean(x);
  const std::size_t n = detail::next_pow2(2 * T);
  std::vector<cplx> z(n, cplx{});
  for (std::size_t t = 0; t < T; ++t)
    z[t] = x[t] - xbar;
  detail::fft_pow2(z, false);
  for (auto &v : z)
    v = std::norm(v);
  detail::fft_pow2(z, true);
  std::vector<double> g(K);
  const double scale = 1.0 / (static_cast<double>(n) * static_cast<double>(T));
  for (std::size_t k = 0; k < K; ++k)
    g[k] = z[k].real() * scale;
  return g;
}

inline AcfResult autocorrelation(std::span<const double> x, std::size_t K) {
  auto g = autocovariance(x, K);
  if (!(g[0] > 0.0))
    throw degenerate_input_error("autocorrelation: series has zero variance");
  const double g0 = g[0];
  for (double &v : g)
    v /= g0;
  g[0] = 1.0;
  return {detail::iota_lags(K), std::move(g), AcfKind::sample};
}

// Autocorrelations of FI(d): rho(k) = rho(k-1) (k-1+d) / (k-d).
inline AcfResult fi_cor_vals(std::size_t K, double d) {
  detail::require_count(K);
  detail::require_stationary_d(d);
  std::vector<double> r(K);
  r[0] = 1.0;
  for (std::size_t k = 1; k < K; ++k) {
    const double kk = static_cast<double>(k);
    r[k] = r[k - 1] * ((kk - 1.0 + d) / (kk - d));
  }
  return {detail::iota_lags(K), std::move(r), AcfKind::theoretical_fi};
}

// gamma(0) / sigma^2 for FI(d): Gamma(1-2d) / Gamma(1-d)^2.
inline double fi_variance_ratio(double d) {
  detail::require_stationary_d(d);
  return std::exp(log_gamma(1.0 - 2.0 * d) - 2.0 * log_gamma(1.0 - d));
}

inline std::vector<double> fi_var_vals(std::size_t K, double d, double sigma = 1.0) {
  auto r = fi_cor_vals(K, d).values;
  const double g0 = sigma * sigma * fi_variance_ratio(d);
  for (double &v : r)
    v *= g0;
  return r;
}

namespace detail {

inline void require_csa_moment_params(double p, double q) {
  if (!(p > 0.0))
    throw domain_error("aggregation parameter p must be positive");
  if (!(q > 1.0))
    throw domain_error("aggregation parameter q must exceed 1 (got " +
                       std::to_string(q) + ")");
}

} // namespace detail

// Autocorrelations of the limiting aggregate, B(p + k/2, q-1) / B(p, q-1).
inline AcfResult csa_cor_vals(std::size_t K, double p, double q) {
  detail::require_count(K);
  detail::require_csa_moment_params(p, q);
  std::vector<double> r(K);
  const double base = log_beta(p, q - 1.0);
  r[0] = 1.0;
  for (std::size_t k = 1; k < K; ++k)
    r[k] = std::exp(log_beta(p + 0.5 * static_cast<double>(k), q - 1.0) - base);
  return {detail::iota_lags(K), std::move(r), AcfKind::theoretical_csa};
}

// Autocovariances of the limiting aggregate.
//
// With alpha^2 ~ Beta(p, q), gamma(k) = sigma^2 E[alpha^k / (1 - alpha^2)]
// = sigma^2 B(p + k/2, q - 1) / B(p, q); at k = 0 this is
// sigma^2 (p + q - 1) / (q - 1).
inline std::vector<double> csa_var_vals(std::size_t K, double p, double q,
                                        double sigma = 1.0) {
  detail::require_count(K);
  detail::require_csa_moment_params(p, q);
  std::vector<double> g(K);
  const double base = log_beta(p, q);
  const double s2 = sigma * sigma;
  for (std::size_t k = 0; k < K; ++k)
    g[k] = s2 * std::exp(log_beta(p + 0.5 * static_cast<double>(k), q - 1.0) - base);
  return g;
}

// Periodogram at the Fourier frequencies 2 pi k / T, k = 1..floor(T/2).
inline Periodogram periodogram(std::span<const double> x) {
  const std::size_t T = x.size();
  if (T < 2)
    throw degenerate_input_error("periodogram requires at least 2 observations");
  detail::require_finite(x, "periodogram");
  const auto X = dft(x);
  const std::size_t K = T / 2;
  Periodogram out;
  out.frequencies.resize(K);
  out.ordinates.resize(K);
  const double norm = 1.0 / (2.0 * std::numbers::pi * static_cast<double>(T));
  for (std::size_t k = 1; k <= K; ++k) {
    out.frequencies[k - 1] =
        2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(T);
    out.ordinates[k - 1] = std::norm(X[k]) * norm;
  }
  return out;
}

} // namespace longmem
