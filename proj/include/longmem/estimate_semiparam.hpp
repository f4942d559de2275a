#pragma once

// Frequency-domain memory estimators: log-periodogram regression (with
// optional bias-reducing polynomial terms), local Whittle and exact local
// Whittle, together with their asymptotic variances.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "longmem/error.hpp"
#include "longmem/generate.hpp"
#include "longmem/moments.hpp"
#include "longmem/optimize.hpp"
#include "longmem/regression.hpp"
#include "longmem/series.hpp"

namespace longmem {

enum class EstimateMethod { gph, gph_br, lw, elw, fi_mle, csa_mle, log_var, rs };

inline const char *to_string(EstimateMethod m) {
  switch (m) {
  case EstimateMethod::gph: return "gph";
  case EstimateMethod::gph_br: return "gph_br";
  case EstimateMethod::lw: return "lw";
  case EstimateMethod::elw: return "elw";
  case EstimateMethod::fi_mle: return "fi_mle";
  case EstimateMethod::csa_mle: return "csa_mle";
  case EstimateMethod::log_var: return "log_var";
  case EstimateMethod::rs: return "rs";
  }
  return "unknown";
}

struct EstimateAux {
  bool boundary_hit = false;
  double objective = std::numeric_limits<double>::quiet_NaN();
  std::size_t evaluations = 0;
  double intercept = std::numeric_limits<double>::quiet_NaN();
};

struct MemoryEstimate {
  double d_hat = 0.0;
  EstimateMethod method = EstimateMethod::gph;
  std::size_t bandwidth_m = 0;
  std::optional<double> asy_variance;
  std::size_t br_order = 0;
  EstimateAux aux;

  double std_error() const { return asy_variance ? std::sqrt(*asy_variance) : 0.0; }
};

// Variance inflation of bias-reduced log-periodogram regression for
// br = 0..4 polynomial terms.
inline constexpr std::array<double, 5> gph_variance_inflation{1.0, 2.25, 3.52, 4.79, 6.06};

// m = round(T^exponent), clamped to [2, floor(T/2)].
inline std::size_t default_bandwidth(std::size_t T, double exponent = 0.8) {
  if (T < 4)
    throw range_error("default_bandwidth: T must be at least 4");
  if (!(exponent > 0.0 && exponent < 1.0))
    throw range_error("default_bandwidth: exponent must lie in (0, 1)");
  const double raw = std::round(std::pow(static_cast<double>(T), exponent));
  const auto m = static_cast<std::size_t>(raw);
  return std::clamp<std::size_t>(m, 2, T / 2);
}

struct BandwidthOptions {
  std::size_t m = 0;              // 0 selects round(T^exponent)
  double bandwidth_exponent = 0.8;
};

struct GphOptions {
  std::size_t m = 0;
  double bandwidth_exponent = 0.8;
  std::size_t br = 0;
};

namespace detail {

inline std::size_t resolve_bandwidth(std::size_t T, std::size_t m, double exponent) {
  const std::size_t mm = m == 0 ? default_bandwidth(T, exponent) : m;
  if (mm < 2)
    throw range_error("bandwidth m must be at least 2");
  if (2 * mm > T)
    throw range_error("bandwidth m = " + std::to_string(mm) +
                      " exceeds T/2 = " + std::to_string(T / 2));
  return mm;
}

inline void require_br(std::size_t br) {
  if (br >= gph_variance_inflation.size())
    throw range_error("bias-reduction order br = " + std::to_string(br) +
                      " not supported (max 4)");
}

} // namespace detail

inline double gph_est_variance(std::size_t T, const GphOptions &opt = {}) {
  detail::require_br(opt.br);
  const std::size_t m = detail::resolve_bandwidth(T, opt.m, opt.bandwidth_exponent);
  return gph_variance_inflation[opt.br] * std::numbers::pi * std::numbers::pi /
         (24.0 * static_cast<double>(m));
}

inline double gph_est_variance(std::span<const double> x, const GphOptions &opt = {}) {
  return gph_est_variance(x.size(), opt);
}

inline double whittle_est_variance(std::size_t T, const BandwidthOptions &opt = {}) {
  const std::size_t m = detail::resolve_bandwidth(T, opt.m, opt.bandwidth_exponent);
  return 1.0 / (4.0 * static_cast<double>(m));
}

inline double whittle_est_variance(std::span<const double> x,
                                   const BandwidthOptions &opt = {}) {
  return whittle_est_variance(x.size(), opt);
}

inline double exact_whittle_est_variance(std::size_t T, const BandwidthOptions &opt = {}) {
  return whittle_est_variance(T, opt);
}

inline double exact_whittle_est_variance(std::span<const double> x,
                                         const BandwidthOptions &opt = {}) {
  return whittle_est_variance(x.size(), opt);
}

// OLS of log I(lambda_k) on [1, -2 log lambda_k, lambda_k^2, ..., lambda_k^{2 br}]
// over the first m Fourier frequencies; d is the coefficient on -2 log lambda.
inline MemoryEstimate gph_est(std::span<const double> x, const GphOptions &opt = {}) {
  detail::require_br(opt.br);
  const std::size_t T = x.size();
  const std::size_t m = detail::resolve_bandwidth(T, opt.m, opt.bandwidth_exponent);
  if (m < opt.br + 2)
    throw range_error("gph_est: bandwidth too small for the requested regressors");
  const auto pg = periodogram(x);

  const auto rows = static_cast<Eigen::Index>(m);
  const auto cols = static_cast<Eigen::Index>(2 + opt.br);
  Eigen::MatrixXd X(rows, cols);
  Eigen::VectorXd y(rows);
  for (Eigen::Index k = 0; k < rows; ++k) {
    const double I = pg.ordinates[static_cast<std::size_t>(k)];
    if (!(I > 0.0))
      throw degenerate_input_error("gph_est: zero periodogram ordinate at k = " +
                                   std::to_string(k + 1));
    const double lam = pg.frequencies[static_cast<std::size_t>(k)];
    y(k) = std::log(I);
    X(k, 0) = 1.0;
    X(k, 1) = -2.0 * std::log(lam);
    double pw = 1.0;
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(opt.br); ++j) {
      pw *= lam * lam;
      X(k, 2 + j) = pw;
    }
  }
  const auto fit = detail::ols(X, y);

  MemoryEstimate est;
  est.d_hat = fit.coef(1);
  est.method = opt.br == 0 ? EstimateMethod::gph : EstimateMethod::gph_br;
  est.bandwidth_m = m;
  est.br_order = opt.br;
  est.asy_variance = gph_est_variance(T, GphOptions{m, opt.bandwidth_exponent, opt.br});
  est.aux.intercept = fit.coef(0);
  return est;
}

// Local Whittle objective
// R(d) = log(mean_k lambda_k^{2d} I_k) - 2d mean_k log lambda_k.
class WhittleObjective {
public:
  WhittleObjective(std::span<const double> x, std::size_t m) {
    const auto pg = periodogram(x);
    if (m > pg.size())
      throw range_error("local Whittle bandwidth exceeds available frequencies");
    log_lambda_.resize(m);
    ordinates_.assign(pg.ordinates.begin(), pg.ordinates.begin() + static_cast<std::ptrdiff_t>(m));
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      log_lambda_[k] = std::log(pg.frequencies[k]);
      s += log_lambda_[k];
    }
    mean_log_lambda_ = s / static_cast<double>(m);
    bool any_positive = false;
    for (double v : ordinates_)
      any_positive = any_positive || v > 0.0;
    if (!any_positive)
      throw degenerate_input_error("local Whittle: all periodogram ordinates are zero");
  }

  double operator()(double d) const {
    // Centring log lambda absorbs the -2d mean(log lambda) term and keeps
    // the exponent small.
    double acc = 0.0;
    for (std::size_t k = 0; k < ordinates_.size(); ++k)
      acc += std::exp(2.0 * d * (log_lambda_[k] - mean_log_lambda_)) * ordinates_[k];
    return std::log(acc / static_cast<double>(ordinates_.size()));
  }

private:
  std::vector<double> log_lambda_;
  std::vector<double> ordinates_;
  double mean_log_lambda_ = 0.0;
};

inline MemoryEstimate whittle_est(std::span<const double> x,
                                  const BandwidthOptions &opt = {}) {
  const std::size_t T = x.size();
  const std::size_t m = detail::resolve_bandwidth(T, opt.m, opt.bandwidth_exponent);
  const WhittleObjective R(x, m);
  const auto res = minimize_bounded(R, -0.5 + 1e-4, 1.0, 1e-8);
  MemoryEstimate est;
  est.d_hat = res.x;
  est.method = EstimateMethod::lw;
  est.bandwidth_m = m;
  est.asy_variance = 1.0 / (4.0 * static_cast<double>(m));
  est.aux.boundary_hit = res.at_bound;
  est.aux.objective = res.value;
  est.aux.evaluations = res.evaluations;
  return est;
}

// Exact local Whittle objective on the demeaned series:
// R(d) = log(mean_k I_{(1-L)^d x}(lambda_k)) - 2d mean_k log lambda_k.
class ExactWhittleObjective {
public:
  ExactWhittleObjective(std::span<const double> x, std::size_t m)
      : centered_(detail::demeaned(x)), m_(m) {
    double s = 0.0;
    const double T = static_cast<double>(x.size());
    for (std::size_t k = 1; k <= m; ++k)
      s += std::log(2.0 * std::numbers::pi * static_cast<double>(k) / T);
    mean_log_lambda_ = s / static_cast<double>(m);
  }

  double operator()(double d) const {
    const auto y = detail::apply_fractional_difference(centered_, d);
    const auto pg = periodogram(y);
    double acc = 0.0;
    for (std::size_t k = 0; k < m_; ++k)
      acc += pg.ordinates[k];
    return std::log(acc / static_cast<double>(m_)) - 2.0 * d * mean_log_lambda_;
  }

private:
  std::vector<double> centered_;
  std::size_t m_;
  double mean_log_lambda_ = 0.0;
};

inline MemoryEstimate exact_whittle_est(std::span<const double> x,
                                        const BandwidthOptions &opt = {}) {
  const std::size_t T = x.size();
  const std::size_t m = detail::resolve_bandwidth(T, opt.m, opt.bandwidth_exponent);
  detail::require_finite(x, "exact_whittle_est");
  const ExactWhittleObjective R(x, m);
  const auto res = minimize_bounded(R, -1.0, 2.0, 1e-8);
  MemoryEstimate est;
  est.d_hat = res.x;
  est.method = EstimateMethod::elw;
  est.bandwidth_m = m;
  est.asy_variance = 1.0 / (4.0 * static_cast<double>(m));
  est.aux.boundary_hit = res.at_bound;
  est.aux.objective = res.value;
  est.aux.evaluations = res.evaluations;
  return est;
}

} // namespace longmem
