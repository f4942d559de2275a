#pragma once

// Parametric estimation: concentrated Gaussian maximum likelihood for FI(d)
// and the limiting aggregate, and OLS for the HAR regression.
//
// With Sigma = s^2 R, profiling s^2 out of the Gaussian log-likelihood
// leaves, up to constants, the function to be minimised
//   L(theta) = log|R| / (2T) + log(x' R^{-1} x / T) / 2,
// and s^2 = x' R^{-1} x / T at the optimum. R is the correlation matrix, so
// s is the marginal standard deviation; the innovation standard deviation
// follows by dividing out gamma(0) / sigma^2.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "longmem/error.hpp"
#include "longmem/moments.hpp"
#include "longmem/optimize.hpp"
#include "longmem/regression.hpp"
#include "longmem/series.hpp"
#include "longmem/toeplitz.hpp"

namespace longmem {

struct FIParams {
  double d = 0.0;
  double sigma = 1.0; // innovation standard deviation
  bool boundary_hit = false;
  double objective = std::numeric_limits<double>::quiet_NaN();
  std::size_t evaluations = 0;
};

struct CSAParams {
  double p = 1.5;
  double q = 1.5;
  double sigma = 1.0;          // innovation standard deviation
  double marginal_scale = 1.0; // sqrt(gamma(0)), i.e. sqrt(x' R^{-1} x / T)
  bool p_at_lower = false;
  bool p_at_upper = false;
  bool q_at_lower = false;
  bool q_at_upper = false;
  bool converged = false;
  double objective = std::numeric_limits<double>::quiet_NaN();
  std::size_t evaluations = 0;

  double implied_d() const { return 1.0 - 0.5 * q; }
  bool boundary_hit() const { return p_at_lower || p_at_upper || q_at_lower || q_at_upper; }
};

struct HARModel {
  std::vector<std::size_t> lags;
  std::vector<double> coefficients; // [a_0, a_1, ...]
  double sigma = 0.0;               // residual standard deviation
  std::size_t rows = 0;             // observations used in the regression
};

inline constexpr double fi_mle_d_lower = -0.5 + 1e-4;
inline constexpr double fi_mle_d_upper = 0.5 - 1e-4;
inline constexpr double csa_mle_lower = 1.0 + 1e-6;
inline constexpr double csa_mle_upper = 50.0;

namespace detail {

inline std::vector<double> prepare_mle_input(std::span<const double> x, const char *who) {
  if (x.size() < 10)
    throw range_error(std::string(who) + ": need at least 10 observations");
  require_finite(x, who);
  auto xc = demeaned(x);
  double ss = 0.0;
  for (double v : xc)
    ss += v * v;
  if (!(ss > 0.0))
    throw degenerate_input_error(std::string(who) + ": series is constant");
  return xc;
}

inline double concentrated_objective(const LoglikTerms &t, std::size_t T) {
  const double n = static_cast<double>(T);
  return t.logdet / (2.0 * n) + 0.5 * std::log(t.quadform / n);
}

} // namespace detail

// Concentrated objective for FI(d) on demeaned data.
inline double fi_mle_objective(std::span<const double> xc, double d) {
  return detail::concentrated_objective(detail::fi_loglik_terms(d, xc), xc.size());
}

inline FIParams fi_mle_est(std::span<const double> x) {
  const auto xc = detail::prepare_mle_input(x, "fi_mle_est");
  const auto res = minimize_bounded([&](double d) { return fi_mle_objective(xc, d); },
                                    fi_mle_d_lower, fi_mle_d_upper, 1e-8);
  const auto terms = detail::fi_loglik_terms(res.x, xc);
  const double marginal_var = terms.quadform / static_cast<double>(xc.size());

  FIParams out;
  out.d = res.x;
  out.sigma = std::sqrt(marginal_var / fi_variance_ratio(res.x));
  out.boundary_hit = res.at_bound;
  out.objective = res.value;
  out.evaluations = res.evaluations;
  return out;
}

// Concentrated objective for the limiting aggregate on demeaned data.
// Loss of positive definiteness maps to +inf so the simplex steps away.
inline double csa_mle_objective(std::span<const double> xc, double p, double q) {
  try {
    const ToeplitzGram gram{csa_cor_vals(xc.size(), p, q).values};
    return detail::concentrated_objective(toeplitz_loglik_terms(gram, xc), xc.size());
  } catch (const numerical_error &) {
    return std::numeric_limits<double>::infinity();
  }
}

inline CSAParams csa_mle_est(std::span<const double> x) {
  const auto xc = detail::prepare_mle_input(x, "csa_mle_est");
  const auto res = minimize_simplex_box(
      [&](const std::array<double, 2> &pq) { return csa_mle_objective(xc, pq[0], pq[1]); },
      {1.5, 1.5}, {csa_mle_lower, csa_mle_lower}, {csa_mle_upper, csa_mle_upper});
  if (!std::isfinite(res.value))
    throw numerical_error("csa_mle_est: no admissible (p, q) found");

  const double p = res.x[0], q = res.x[1];
  const ToeplitzGram gram{csa_cor_vals(xc.size(), p, q).values};
  const auto terms = toeplitz_loglik_terms(gram, xc);
  const double marginal_var = terms.quadform / static_cast<double>(xc.size());

  CSAParams out;
  out.p = p;
  out.q = q;
  out.marginal_scale = std::sqrt(marginal_var);
  out.sigma = std::sqrt(marginal_var * (q - 1.0) / (p + q - 1.0));
  out.p_at_lower = res.at_lower[0];
  out.p_at_upper = res.at_upper[0];
  out.q_at_lower = res.at_lower[1];
  out.q_at_upper = res.at_upper[1];
  out.converged = res.converged;
  out.objective = res.value;
  out.evaluations = res.evaluations;
  return out;
}

// HAR regression x_t = a_0 + sum_j a_j mean(x_{t-L_j}, ..., x_{t-1}) + e_t
// over t = max(L)+1 .. T. Duplicate horizons make the design singular and
// surface as rank_error.
inline HARModel har_est(std::span<const double> x,
                        std::vector<std::size_t> lags = {1, 5, 22}) {
  if (lags.empty())
    throw empty_request_error("har_est: no lags given");
  for (std::size_t L : lags)
    if (L == 0)
      throw range_error("har_est: lags must be positive");
  const std::size_t T = x.size();
  const std::size_t Lmax = *std::max_element(lags.begin(), lags.end());
  if (T <= Lmax + 10)
    throw range_error("har_est: need more than max(lags) + 10 = " +
                      std::to_string(Lmax + 10) + " observations, got " + std::to_string(T));
  detail::require_finite(x, "har_est");

  // prefix[t] = x_0 + ... + x_{t-1}
  std::vector<double> prefix(T + 1, 0.0);
  for (std::size_t t = 0; t < T; ++t)
    prefix[t + 1] = prefix[t] + x[t];

  const auto n = static_cast<Eigen::Index>(T - Lmax);
  const auto k = static_cast<Eigen::Index>(lags.size());
  Eigen::MatrixXd X(n, k + 1);
  Eigen::VectorXd y(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::size_t t = Lmax + static_cast<std::size_t>(r);
    y(r) = x[t];
    X(r, 0) = 1.0;
    for (Eigen::Index j = 0; j < k; ++j) {
      const std::size_t L = lags[static_cast<std::size_t>(j)];
      X(r, j + 1) = (prefix[t] - prefix[t - L]) / static_cast<double>(L);
    }
  }
  const auto fit = detail::ols(X, y);

  HARModel m;
  m.lags = std::move(lags);
  m.coefficients.assign(fit.coef.data(), fit.coef.data() + fit.coef.size());
  m.rows = static_cast<std::size_t>(n);
  m.sigma = std::sqrt(fit.rss / static_cast<double>(n - k - 1));
  return m;
}

} // namespace longmem
