#pragma once

// h-step forecasts for FI, the limiting aggregate and HAR, with 95% bands
// from the cumulative MA variance of each model.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "longmem/error.hpp"
#include "longmem/estimate_param.hpp"
#include "longmem/generate.hpp"
#include "longmem/moments.hpp"
#include "longmem/series.hpp"
#include "longmem/specfun.hpp"
#include "longmem/toeplitz.hpp"

namespace longmem {

inline constexpr double band_quantile = 1.96;
inline constexpr std::size_t yule_walker_order_cap = 500;

struct Forecast {
  std::size_t history_length = 0;
  std::size_t horizon = 0;
  std::vector<double> point;
  std::vector<double> lower;
  std::vector<double> upper;
  std::variant<FIParams, CSAParams, HARModel> model;
  std::optional<double> mean; // added back to every output when present
};

struct ForecastOptions {
  std::optional<double> mean; // subtracted before, added back after
  std::size_t truncation = 0; // AR lags used by fi_forecast; 0 uses all
};

namespace detail {

inline void require_horizon(std::size_t h) {
  if (h == 0)
    throw range_error("forecast horizon must be at least 1");
}

// Band half-widths 1.96 sigma sqrt(sum_{i<j} m_i^2) for j = 1..h.
inline std::vector<double> band_halfwidths(std::span<const double> ma, double sigma) {
  std::vector<double> out(ma.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < ma.size(); ++j) {
    acc += ma[j] * ma[j];
    out[j] = band_quantile * sigma * std::sqrt(acc);
  }
  return out;
}

inline void finish_forecast(Forecast &f, std::span<const double> half) {
  const double shift = f.mean.value_or(0.0);
  f.lower.resize(f.horizon);
  f.upper.resize(f.horizon);
  for (std::size_t j = 0; j < f.horizon; ++j) {
    f.point[j] += shift;
    f.lower[j] = f.point[j] - half[j];
    f.upper[j] = f.point[j] + half[j];
  }
}

inline std::vector<double> centered_history(std::span<const double> x,
                                            const std::optional<double> &mean) {
  std::vector<double> z(x.begin(), x.end());
  if (mean)
    for (double &v : z)
      v -= *mean;
  return z;
}

} // namespace detail

// Truncated AR(inf) recursion with weights a_k = -psi_k, psi the
// coefficients of (1-L)^d, so a_1 = d.
inline Forecast fi_forecast(std::span<const double> x, std::size_t h, double d,
                            double sigma, const ForecastOptions &opt = {}) {
  detail::require_horizon(h);
  if (x.size() < 2)
    throw range_error("fi_forecast: need at least 2 observations");
  detail::require_stationary_d(d);
  detail::require_sigma(sigma);
  detail::require_finite(x, "fi_forecast");

  const std::size_t T = x.size();
  auto z = detail::centered_history(x, opt.mean);
  const std::size_t K = opt.truncation == 0 ? T + h - 1 : opt.truncation;
  const auto psi = detail::fi_ar_values(K + 1, d);

  Forecast f;
  f.history_length = T;
  f.horizon = h;
  f.mean = opt.mean;
  f.model = FIParams{d, sigma};
  f.point.resize(h);
  z.reserve(T + h);
  for (std::size_t j = 0; j < h; ++j) {
    const std::size_t n = z.size();
    const std::size_t top = std::min(K, n);
    double s = 0.0;
    for (std::size_t k = 1; k <= top; ++k)
      s -= psi[k] * z[n - k];
    z.push_back(s);
    f.point[j] = s;
  }
  const auto half = detail::band_halfwidths(detail::fi_ma_values(h, d), sigma);
  detail::finish_forecast(f, half);
  return f;
}

// Yule-Walker weights of order min(T-1, 500) from the aggregate's ACF.
inline std::vector<double> csa_predictor_weights(std::size_t k, double p, double q) {
  const auto rho = csa_cor_vals(k + 1, p, q).values;
  return yule_walker(rho, k);
}

inline Forecast csa_forecast(std::span<const double> x, std::size_t h, double p, double q,
                             double sigma, const ForecastOptions &opt = {}) {
  detail::require_horizon(h);
  if (x.size() < 2)
    throw range_error("csa_forecast: need at least 2 observations");
  detail::require_csa_moment_params(p, q);
  detail::require_sigma(sigma);
  detail::require_finite(x, "csa_forecast");

  const std::size_t T = x.size();
  auto z = detail::centered_history(x, opt.mean);
  const std::size_t k = std::min(T - 1, yule_walker_order_cap);
  const auto psi = csa_predictor_weights(k, p, q);

  Forecast f;
  f.history_length = T;
  f.horizon = h;
  f.mean = opt.mean;
  CSAParams model;
  model.p = p;
  model.q = q;
  model.sigma = sigma;
  model.marginal_scale = sigma * std::sqrt((p + q - 1.0) / (q - 1.0));
  f.model = model;
  f.point.resize(h);
  z.reserve(T + h);
  for (std::size_t j = 0; j < h; ++j) {
    const std::size_t n = z.size();
    double s = 0.0;
    for (std::size_t i = 1; i <= k; ++i)
      s += psi[i - 1] * z[n - i];
    z.push_back(s);
    f.point[j] = s;
  }
  const auto half = detail::band_halfwidths(csa_ma_coefs(h, p, q).values, sigma);
  detail::finish_forecast(f, half);
  return f;
}

// MA(inf) coefficients m_0..m_{h-1} of a fitted HAR model. Its AR form has
// weights b_i = sum_{j : L_j >= i} a_j / L_j.
inline std::vector<double> har_ma_coefs(const HARModel &m, std::size_t h) {
  const std::size_t Lmax = *std::max_element(m.lags.begin(), m.lags.end());
  std::vector<double> b(Lmax + 1, 0.0);
  for (std::size_t j = 0; j < m.lags.size(); ++j) {
    const std::size_t L = m.lags[j];
    for (std::size_t i = 1; i <= L; ++i)
      b[i] += m.coefficients[j + 1] / static_cast<double>(L);
  }
  std::vector<double> ma(h, 0.0);
  if (h > 0)
    ma[0] = 1.0;
  for (std::size_t n = 1; n < h; ++n) {
    double s = 0.0;
    for (std::size_t i = 1; i <= std::min(n, Lmax); ++i)
      s += b[i] * ma[n - i];
    ma[n] = s;
  }
  return ma;
}

// Fits har_est, then iterates the regression forward, feeding forecasts
// back into the trailing means.
inline Forecast har_forecast(std::span<const double> x, std::size_t h,
                             std::vector<std::size_t> lags = {1, 5, 22}) {
  detail::require_horizon(h);
  auto model = har_est(x, std::move(lags));

  std::vector<double> z(x.begin(), x.end());
  z.reserve(z.size() + h);
  Forecast f;
  f.history_length = x.size();
  f.horizon = h;
  f.point.resize(h);
  for (std::size_t j = 0; j < h; ++j) {
    const std::size_t n = z.size();
    double s = model.coefficients[0];
    for (std::size_t i = 0; i < model.lags.size(); ++i) {
      const std::size_t L = model.lags[i];
      double acc = 0.0;
      for (std::size_t k = 1; k <= L; ++k)
        acc += z[n - k];
      s += model.coefficients[i + 1] * acc / static_cast<double>(L);
    }
    z.push_back(s);
    f.point[j] = s;
  }
  const auto half = detail::band_halfwidths(har_ma_coefs(model, h), model.sigma);
  f.model = std::move(model);
  detail::finish_forecast(f, half);
  return f;
}

} // namespace longmem
