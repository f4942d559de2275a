#include <gtest/gtest.h>

#include "longmem/estimate_param.hpp"
#include "longmem/generate.hpp"
#include "oracles.hpp"

using namespace longmem;

namespace {
// Full Gaussian log-likelihood of demeaned x under gamma = s2 * rho, dense.
double full_loglik(std::span<const double> xc, std::span<const double> rho, double s2) {
  const auto o = oracle::dense_loglik(rho, xc);
  const double T = static_cast<double>(xc.size());
  return -0.5 * (T * std::log(2.0 * std::numbers::pi * s2) + o.logdet + o.quadform / s2);
}
} // namespace

TEST(FiMle, WhiteNoise) {
  const auto x = fi_gen(1 << 12, 0.0, 2.0, RngSpec{3});
  const auto p = fi_mle_est(x);
  EXPECT_NEAR(p.d, 0.0, 0.05);
  EXPECT_NEAR(p.sigma, 2.0, 0.1);
  EXPECT_FALSE(p.boundary_hit);
}

TEST(FiMle, RecoversMemory) {
  const double T = 1 << 12;
  const auto x = fi_gen(1 << 12, 0.3, RngSpec{4});
  const auto p = fi_mle_est(x);
  EXPECT_NEAR(p.d, 0.3, 3.0 * std::sqrt(6.0 / (std::numbers::pi * std::numbers::pi * T)));
  EXPECT_NEAR(p.sigma, 1.0, 0.05);
}

TEST(FiMle, ShiftInvariantAndScaleEquivariant) {
  const auto x = fi_gen(2000, 0.25, RngSpec{5}).values;
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    y[i] = 100.0 - 3.0 * x[i];
  const auto a = fi_mle_est(x), b = fi_mle_est(y);
  EXPECT_NEAR(a.d, b.d, 1e-6);
  EXPECT_NEAR(b.sigma, 3.0 * a.sigma, 1e-6 * b.sigma);
}

TEST(FiMle, MinimisesTheConcentratedObjective) {
  const auto x = fi_gen(500, 0.2, RngSpec{6}).values;
  const auto p = fi_mle_est(x);
  const auto xc = detail::demeaned(x);
  for (double h : {-1e-3, 1e-3})
    EXPECT_LT(fi_mle_objective(xc, p.d), fi_mle_objective(xc, p.d + h));
  // Objective on the correlation scale, checked against dense algebra.
  const auto rho = fi_cor_vals(500, 0.2).values;
  const auto o = oracle::dense_loglik(rho, xc);
  EXPECT_NEAR(fi_mle_objective(xc, 0.2), o.logdet / 1000.0 + 0.5 * std::log(o.quadform / 500.0),
              1e-10);
}

TEST(FiMle, ConcentratedScaleMaximisesFullLikelihood) {
  for (std::uint64_t seed : {7u, 8u, 9u}) {
    const auto x = fi_gen(300, 0.3, RngSpec{seed}).values;
    const auto p = fi_mle_est(x);
    const auto xc = detail::demeaned(x);
    const auto rho = fi_cor_vals(300, p.d).values;
    const double s2 = p.sigma * p.sigma * fi_variance_ratio(p.d);
    const double at = full_loglik(xc, rho, s2);
    EXPECT_GT(at, full_loglik(xc, rho, 0.9 * s2));
    EXPECT_GT(at, full_loglik(xc, rho, 1.1 * s2));
  }
}

TEST(FiMle, Errors) {
  EXPECT_THROW(fi_mle_est(std::vector<double>(9, 1.0)), range_error);
  EXPECT_THROW(fi_mle_est(std::vector<double>(20, 4.0)), degenerate_input_error);
  std::vector<double> bad(20, 1.0);
  bad[3] = NAN;
  EXPECT_THROW(fi_mle_est(bad), domain_error);
}

TEST(CsaMle, RecoversTailParameter) {
  const auto x = csa_gen(1 << 12, 1.3, 1.5, RngSpec{10});
  const auto p = csa_mle_est(x);
  EXPECT_NEAR(p.q, 1.5, 0.3);
  EXPECT_NEAR(p.implied_d(), 0.25, 0.15);
  EXPECT_TRUE(p.converged);
  EXPECT_NEAR(p.sigma, 1.0, 0.15);
  EXPECT_NEAR(p.marginal_scale * p.marginal_scale,
              p.sigma * p.sigma * (p.p + p.q - 1.0) / (p.q - 1.0), 1e-9);
}

TEST(CsaMle, WhiteNoiseRunsToTheLeastCorrelatedCorner) {
  // rho(1) falls as q grows and p shrinks, so short memory drives both
  // parameters to their bounds. The implied d = 1 - q/2 is then far below
  // zero: the family has no white-noise member inside the box.
  const auto x = fi_gen(2000, 0.0, RngSpec{11});
  const auto p = csa_mle_est(x);
  EXPECT_TRUE(p.q_at_upper);
  EXPECT_TRUE(p.p_at_lower);
  EXPECT_TRUE(p.boundary_hit());
  const double rho1 = csa_cor_vals(2, p.p, p.q).values[1];
  const double corner = oracle::csa_acf(1, csa_mle_lower, csa_mle_upper);
  EXPECT_NEAR(rho1, corner, 1e-6);
  EXPECT_LT(rho1, 0.13);
  EXPECT_NEAR(p.sigma, 1.0, 0.1);
}

TEST(CsaMle, ObjectiveIsInfiniteWhenUndefined) {
  const auto xc = detail::demeaned(fi_gen(50, 0.1, RngSpec{1}).values);
  EXPECT_TRUE(std::isfinite(csa_mle_objective(xc, 1.3, 1.5)));
  EXPECT_THROW(csa_mle_objective(xc, 1.3, 0.5), domain_error);
}

TEST(Har, LagOneIsAr1Ols) {
  // AR(1): x_t = 0.5 x_{t-1} + e_t.
  const std::size_t T = 1 << 12;
  std::mt19937_64 g(12);
  std::normal_distribution<double> nd;
  std::vector<double> x(T);
  x[0] = nd(g);
  for (std::size_t t = 1; t < T; ++t)
    x[t] = 0.5 * x[t - 1] + nd(g);
  const auto m = har_est(x, {1});
  EXPECT_NEAR(m.coefficients[1], 0.5, 0.05);
  const std::vector<double> lagged(x.begin(), x.end() - 1), now(x.begin() + 1, x.end());
  EXPECT_NEAR(m.coefficients[1], oracle::ols_slope(lagged, now), 1e-10);
  EXPECT_EQ(m.rows, T - 1);
  double rss = 0.0;
  for (std::size_t t = 1; t < T; ++t) {
    const double e = x[t] - m.coefficients[0] - m.coefficients[1] * x[t - 1];
    rss += e * e;
  }
  EXPECT_NEAR(m.sigma, std::sqrt(rss / (T - 1 - 2)), 1e-10);
}

TEST(Har, TrailingMeanRegressors) {
  // Noise-free data generated by the HAR recursion is fitted exactly.
  const std::vector<std::size_t> lags{1, 3, 7};
  const std::vector<double> a{0.2, 0.3, 0.25, 0.2};
  std::mt19937_64 g(13);
  std::normal_distribution<double> nd;
  std::vector<double> x(200);
  for (std::size_t t = 0; t < 7; ++t)
    x[t] = nd(g);
  for (std::size_t t = 7; t < x.size(); ++t) {
    double v = a[0];
    for (std::size_t j = 0; j < 3; ++j) {
      double s = 0.0;
      for (std::size_t i = 1; i <= lags[j]; ++i)
        s += x[t - i];
      v += a[j + 1] * s / lags[j];
    }
    x[t] = v + 0.01 * nd(g);
  }
  const auto m = har_est(x, lags);
  for (std::size_t j = 0; j < 4; ++j)
    EXPECT_NEAR(m.coefficients[j], a[j], 0.05) << j;
  EXPECT_EQ(m.rows, 193u);
  EXPECT_NEAR(m.sigma, 0.01, 0.002);
}

TEST(Har, Errors) {
  EXPECT_THROW(har_est(std::vector<double>(100, 3.0), {1, 5}), rank_error);
  const auto x = fi_gen(100, 0.2, RngSpec{14});
  EXPECT_THROW(har_est(x, {1, 5, 5}), rank_error);
  EXPECT_THROW(har_est(x, {1, 95}), range_error);
  EXPECT_THROW(har_est(x, {0, 5}), range_error);
  EXPECT_THROW(har_est(x, {}), empty_request_error);
}
