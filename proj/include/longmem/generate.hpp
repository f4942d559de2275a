#pragma once

// Long-memory generators: fractional integration, cross-sectional
// aggregation (finite and limiting forms) and stochastic-duration shocks.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "longmem/error.hpp"
#include "longmem/fft.hpp"
#include "longmem/moments.hpp"
#include "longmem/series.hpp"
#include "longmem/specfun.hpp"

namespace longmem {

namespace detail {

inline void require_positive_length(std::size_t T) {
  if (T == 0)
    throw empty_request_error("series length must be positive");
}

inline void require_sigma(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw domain_error("innovation standard deviation must be positive");
}

inline std::vector<double> gaussian_draws(std::mt19937_64 &eng, std::size_t n,
                                          double sigma) {
  std::normal_distribution<double> nd(0.0, sigma);
  std::vector<double> e(n);
  for (auto &v : e)
    v = nd(eng);
  return e;
}

// Applies (1-L)^d for any finite d; used by the exact local Whittle search,
// which ranges outside the public (-1, 1) window.
inline std::vector<double> apply_fractional_difference(std::span<const double> x,
                                                       double d) {
  const auto c = fi_ar_values(x.size(), d);
  return fft_convolve(x, c);
}

} // namespace detail

// FI(d) series: T Gaussian innovations filtered by (1-L)^{-d}.
inline Series fi_gen(std::size_t T, double d, double sigma, const RngSpec &rng) {
  detail::require_positive_length(T);
  detail::require_sigma(sigma);
  const auto coefs = fi_ma_coefs(T, d);
  auto eng = detail::make_engine(rng);
  auto eps = detail::gaussian_draws(eng, T, sigma);
  // d = 0 is the identity filter; skip the transform so the output is exact.
  Series s(d == 0.0 ? std::move(eps) : fft_convolve(eps, coefs.values),
           Origin::simulated, rng.seed);
  s.label = "fi";
  return s;
}

inline Series fi_gen(std::size_t T, double d, const RngSpec &rng) {
  return fi_gen(T, d, 1.0, rng);
}

// Applies (1-L)^d to x. fracdiff(fracdiff(x, d), -d) recovers x.
inline Series fracdiff(std::span<const double> x, double d) {
  if (!(d > -1.0 && d < 1.0))
    throw domain_error("fracdiff: d = " + std::to_string(d) + " outside (-1, 1)");
  if (x.empty())
    throw empty_request_error("fracdiff: empty series");
  detail::require_finite(x, "fracdiff");
  if (d == 0.0)
    return Series(std::vector<double>(x.begin(), x.end()));
  return Series(detail::apply_fractional_difference(x, d));
}

// Limiting aggregate of heterogeneous AR(1)s through its MA(inf) form.
// Memory parameter d = 1 - q/2.
inline Series csa_gen(std::size_t T, double p, double q, double sigma,
                      const RngSpec &rng) {
  detail::require_positive_length(T);
  detail::require_sigma(sigma);
  const auto coefs = csa_ma_coefs(T, p, q);
  auto eng = detail::make_engine(rng);
  const auto eps = detail::gaussian_draws(eng, T, sigma);
  Series s(fft_convolve(eps, coefs.values), Origin::simulated, rng.seed);
  s.label = "csa";
  return s;
}

inline Series csa_gen(std::size_t T, double p, double q, const RngSpec &rng) {
  return csa_gen(T, p, q, 1.0, rng);
}

// Finite cross-sectional aggregate: N AR(1) paths with alpha_i^2 ~ Beta(p, q),
// each started from its stationary law, summed and scaled by 1/sqrt(N).
inline Series csa_gen_finite(std::size_t T, std::size_t N, double p, double q,
                             double sigma, const RngSpec &rng) {
  detail::require_positive_length(T);
  if (N == 0)
    throw empty_request_error("csa_gen_finite: N = 0 processes");
  detail::require_sigma(sigma);
  detail::require_beta_params(p, q);
  auto eng = detail::make_engine(rng);
  std::gamma_distribution<double> ga(p, 1.0), gb(q, 1.0);
  std::normal_distribution<double> nd(0.0, 1.0);

  std::vector<double> sum(T, 0.0);
  for (std::size_t i = 0; i < N; ++i) {
    const double u = ga(eng);
    const double v = gb(eng);
    const double alpha = std::sqrt(u / (u + v));
    double state = nd(eng) * sigma / std::sqrt(1.0 - alpha * alpha);
    for (std::size_t t = 0; t < T; ++t) {
      state = alpha * state + sigma * nd(eng);
      sum[t] += state;
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(N));
  for (double &v : sum)
    v *= scale;
  Series s(std::move(sum), Origin::simulated, rng.seed);
  s.label = "csa-finite";
  return s;
}

inline Series csa_gen_finite(std::size_t T, std::size_t N, double p, double q,
                             const RngSpec &rng) {
  return csa_gen_finite(T, N, p, q, 1.0, rng);
}

// Survival probabilities p_k = P(duration >= k), k = 0..K-1, chosen so the
// duration-shock process has FI(d) autocovariances up to scale.
//
// p_k is proportional to gamma_FI(k) - gamma_FI(k+1); normalising to p_0 = 1
// reduces this to p_k = rho(k) (1-d) / (k+1-d) with rho the FI(d) ACF
// computed recursively. The tail decays like k^{2d-2}.
inline std::vector<double> fi_survival_probs(std::size_t K, double d) {
  detail::require_count(K);
  if (!(d > 0.0 && d < 0.5))
    throw domain_error("fi_survival_probs: d = " + std::to_string(d) +
                       " outside (0, 1/2)");
  std::vector<double> p(K);
  double rho = 1.0;
  for (std::size_t k = 0; k < K; ++k) {
    const double kk = static_cast<double>(k);
    if (k > 0)
      rho *= (kk - 1.0 + d) / (kk - d);
    p[k] = rho * (1.0 - d) / (kk + 1.0 - d);
  }
  return p;
}

// Stochastic-duration shocks: the shock born at s stays alive through
// s + n_s with P(n_s >= k) = p_k. Only shocks born inside the sample are
// included and durations are capped at T.
inline Series sds_gen(std::size_t T, double d, double sigma, const RngSpec &rng) {
  detail::require_positive_length(T);
  detail::require_sigma(sigma);
  const auto surv = fi_survival_probs(T + 1, d);
  auto eng = detail::make_engine(rng);
  std::normal_distribution<double> nd(0.0, sigma);
  std::uniform_real_distribution<double> ud(0.0, 1.0);

  // diff[t] accumulates shocks entering at t and leaving after their last day.
  std::vector<double> diff(T + 1, 0.0);
  for (std::size_t s = 0; s < T; ++s) {
    const double eps = nd(eng);
    const double u = ud(eng);
    // n = #{k >= 1 : p_k > u}; p is nonincreasing.
    const auto it = std::partition_point(surv.begin() + 1, surv.end(),
                                         [u](double pk) { return pk > u; });
    const auto n = std::min<std::size_t>(static_cast<std::size_t>(it - surv.begin()) - 1, T);
    diff[s] += eps;
    const std::size_t end = s + n + 1;
    if (end < T)
      diff[end] -= eps;
  }
  std::vector<double> x(T);
  double acc = 0.0;
  for (std::size_t t = 0; t < T; ++t) {
    acc += diff[t];
    x[t] = acc;
  }
  Series out(std::move(x), Origin::simulated, rng.seed);
  out.label = "sds";
  return out;
}

inline Series sds_gen(std::size_t T, double d, const RngSpec &rng) {
  return sds_gen(T, d, 1.0, rng);
}

} // namespace longmem
