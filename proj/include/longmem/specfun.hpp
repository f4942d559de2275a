#pragma once

// Coefficient sequences of the fractional difference operator and of the
// aggregated-AR(1) moving average, plus log-gamma/log-beta kernels.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "longmem/error.hpp"
#include "longmem/fft.hpp"

#if defined(__GLIBC__)
#include <math.h>
#endif

namespace longmem {

enum class CoefKind { fi_ma, fi_ar, csa_ma };

// Parameters that generated a coefficient sequence. FI kinds use `d`;
// the CSA kind uses `p` and `q`.
struct CoefParams {
  double d = 0.0;
  double p = 0.0;
  double q = 0.0;
};

struct CoefSequence {
  std::vector<double> values;
  CoefKind kind;
  CoefParams param;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t k) const { return values[k]; }
};

namespace detail {

inline void require_count(std::size_t K) {
  if (K == 0)
    throw empty_request_error("coefficient request for K = 0 terms");
}

inline void require_stationary_d(double d) {
  if (!(d > -0.5 && d < 0.5))
    throw domain_error("memory parameter d = " + std::to_string(d) +
                       " outside (-1/2, 1/2)");
}

inline void require_beta_params(double p, double q) {
  if (!(p > 1.0) || !(q > 1.0))
    throw domain_error("beta parameters require p > 1 and q > 1 (got p = " +
                       std::to_string(p) + ", q = " + std::to_string(q) + ")");
}

// (1-L)^{-d} expansion for any finite d. Unchecked.
inline std::vector<double> fi_ma_values(std::size_t K, double d) {
  std::vector<double> v(K);
  if (K == 0)
    return v;
  v[0] = 1.0;
  for (std::size_t k = 1; k < K; ++k)
    v[k] = v[k - 1] * ((static_cast<double>(k) - 1.0 + d) / static_cast<double>(k));
  return v;
}

// (1-L)^{d} expansion for any finite d. Unchecked.
inline std::vector<double> fi_ar_values(std::size_t K, double d) {
  return fi_ma_values(K, -d);
}

} // namespace detail

// MA(inf) weights of (1-L)^{-d}: pi_0 = 1, pi_k = pi_{k-1} (k-1+d)/k.
inline CoefSequence fi_ma_coefs(std::size_t K, double d) {
  detail::require_count(K);
  detail::require_stationary_d(d);
  return {detail::fi_ma_values(K, d), CoefKind::fi_ma, {d, 0.0, 0.0}};
}

// Expansion of (1-L)^{d}: psi_0 = 1, psi_1 = -d, psi_k = psi_{k-1} (k-1-d)/k.
//
// These are the raw binomial coefficients; predictor weights for forecasting
// are their negation at lags k >= 1.
inline CoefSequence fi_ar_coefs(std::size_t K, double d) {
  detail::require_count(K);
  detail::require_stationary_d(d);
  return {detail::fi_ar_values(K, d), CoefKind::fi_ar, {d, 0.0, 0.0}};
}

// MA weights of the limiting aggregated process,
// phi_k = sqrt(B(p+k, q) / B(p, q)), via the ratio
// phi_k / phi_{k-1} = sqrt((p+k-1) / (p+q+k-1)).
inline CoefSequence csa_ma_coefs(std::size_t K, double p, double q) {
  detail::require_count(K);
  detail::require_beta_params(p, q);
  std::vector<double> v(K);
  v[0] = 1.0;
  for (std::size_t k = 1; k < K; ++k) {
    const double kk = static_cast<double>(k);
    v[k] = v[k - 1] * std::sqrt((p + kk - 1.0) / (p + q + kk - 1.0));
  }
  return {std::move(v), CoefKind::csa_ma, {0.0, p, q}};
}

inline double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw domain_error("log_gamma requires a positive finite argument");
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

inline double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0))
    throw domain_error("log_beta requires positive arguments");
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

} // namespace longmem
