#include <gtest/gtest.h>

#include "longmem/estimate_semiparam.hpp"
#include "longmem/generate.hpp"
#include "oracles.hpp"

using namespace longmem;

namespace {
std::vector<double> same_draws(std::size_t T, std::uint64_t seed, double sigma) {
  std::mt19937_64 eng(seed);
  std::normal_distribution<double> nd(0.0, sigma);
  std::vector<double> e(T);
  for (auto &v : e)
    v = nd(eng);
  return e;
}
} // namespace

TEST(FiGen, IsTheMaFilterAppliedToGaussianDraws) {
  const std::size_t T = 400;
  const double d = 0.3, sigma = 1.5;
  const auto x = fi_gen(T, d, sigma, RngSpec{77});
  std::vector<double> pi(T);
  for (std::size_t k = 0; k < T; ++k)
    pi[k] = oracle::fi_ma(k, d);
  const auto ref = oracle::convolve(same_draws(T, 77, sigma), pi);
  EXPECT_LT(oracle::max_abs_diff(x.values, ref), 1e-10);
  EXPECT_EQ(x.origin, Origin::simulated);
  EXPECT_EQ(x.seed, 77u);
}

TEST(FiGen, DeterministicAndSeedSensitive) {
  const auto a = fi_gen(1000, 0.25, RngSpec{1});
  const auto b = fi_gen(1000, 0.25, RngSpec{1});
  const auto c = fi_gen(1000, 0.25, RngSpec{2});
  EXPECT_EQ(a.values, b.values);
  EXPECT_NE(a.values, c.values);
}

TEST(FiGen, ZeroMemoryIsWhiteNoise) {
  const auto x = fi_gen(256, 0.0, 2.0, RngSpec{4});
  EXPECT_EQ(x.values, same_draws(256, 4, 2.0));
}

TEST(FiGen, Errors) {
  EXPECT_THROW(fi_gen(0, 0.2, RngSpec{}), empty_request_error);
  EXPECT_THROW(fi_gen(10, 0.5, RngSpec{}), domain_error);
  EXPECT_THROW(fi_gen(10, 0.2, 0.0, RngSpec{}), domain_error);
  EXPECT_THROW(fi_gen(10, 0.2, 1.0, RngSpec{0, "pcg"}), domain_error);
}

TEST(Fracdiff, MatchesDirectSum) {
  const auto x = fi_gen(1000, 0.2, RngSpec{3}).values;
  for (double d : {-0.7, 0.1, 0.45, 0.9}) {
    std::vector<double> c(x.size());
    for (std::size_t k = 0; k < c.size(); ++k)
      c[k] = oracle::fi_ar(k, d);
    EXPECT_LT(oracle::max_abs_diff(fracdiff(x, d).values, oracle::convolve(x, c)), 1e-10) << d;
  }
}

TEST(Fracdiff, RoundTrip) {
  const auto x = fi_gen(10000, 0.0, RngSpec{8}).values;
  for (double d : {0.1, 0.45}) {
    const auto back = fracdiff(fracdiff(x, d), -d).values;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      num = std::max(num, std::abs(back[i] - x[i]));
      den = std::max(den, std::abs(x[i]));
    }
    EXPECT_LT(num / den, 1e-8) << d;
  }
}

TEST(Fracdiff, UndoesFiGen) {
  // (1-L)^d applied to an FI(d) path returns the innovations.
  const auto x = fi_gen(2048, 0.4, RngSpec{10});
  const auto e = fracdiff(x, 0.4).values;
  EXPECT_LT(oracle::max_abs_diff(e, same_draws(2048, 10, 1.0)), 1e-9);
}

TEST(Fracdiff, Errors) {
  const std::vector<double> x{1.0, 2.0};
  EXPECT_THROW(fracdiff(x, 1.0), domain_error);
  EXPECT_THROW(fracdiff(x, -1.0), domain_error);
  EXPECT_THROW(fracdiff(std::vector<double>{}, 0.2), empty_request_error);
  EXPECT_THROW(fracdiff(std::vector<double>{1.0, NAN}, 0.2), domain_error);
  EXPECT_EQ(fracdiff(x, 0.0).values, x);
}

TEST(CsaGen, IsTheMaFilterAppliedToGaussianDraws) {
  const std::size_t T = 300;
  const auto x = csa_gen(T, 1.3, 1.5, RngSpec{12});
  std::vector<double> phi(T);
  for (std::size_t k = 0; k < T; ++k)
    phi[k] = oracle::csa_ma(k, 1.3, 1.5);
  EXPECT_LT(oracle::max_abs_diff(x.values, oracle::convolve(same_draws(T, 12, 1.0), phi)), 1e-10);
}

TEST(CsaGenFinite, StationaryVarianceAcrossPaths) {
  // Each AR(1) starts in its stationary law, so Var(x_t) = E[1/(1-a^2)]
  // = (p+q-1)/(q-1) at every t, including t = 0.
  const double p = 2.0, q = 3.0;
  const double target = (p + q - 1.0) / (q - 1.0);
  // One path is strongly autocorrelated, so average x_t^2 over many seeds.
  double ss = 0.0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto x = csa_gen_finite(50, 2000, p, q, RngSpec{1000 + seed});
    ASSERT_EQ(x.size(), 50u);
    for (double v : x.values)
      ss += v * v;
  }
  EXPECT_NEAR(ss / (40.0 * 50.0), target, 0.2 * target);
  // Across seeds, the t = 0 value has variance `target`.
  double s0 = 0.0;
  const int reps = 400;
  for (int r = 0; r < reps; ++r) {
    const double v = csa_gen_finite(1, 50, p, q, RngSpec{static_cast<std::uint64_t>(r)}).values[0];
    s0 += v * v;
  }
  EXPECT_NEAR(s0 / reps, target, 0.25 * target);
}

TEST(CsaGenFinite, Errors) {
  EXPECT_THROW(csa_gen_finite(10, 0, 1.3, 1.5, RngSpec{}), empty_request_error);
  EXPECT_THROW(csa_gen_finite(10, 5, 0.5, 1.5, RngSpec{}), domain_error);
}

TEST(SurvivalProbs, TelescopeToFiAutocorrelations) {
  // p_k is proportional to rho(k) - rho(k+1) with p_0 = 1. The reference is
  // a difference of nearby log-gamma values, hence the relative tolerance.
  for (double d : {0.1, 0.3, 0.45}) {
    const auto p = fi_survival_probs(300, d);
    const double norm = 1.0 - oracle::fi_acf(1, d);
    for (std::size_t k = 0; k < 300; ++k) {
      const double ref = (oracle::fi_acf(k, d) - oracle::fi_acf(k + 1, d)) / norm;
      EXPECT_NEAR(p[k], ref, 1e-8 * ref);
    }
    EXPECT_EQ(p[0], 1.0);
    for (std::size_t k = 1; k < 300; ++k)
      EXPECT_LT(p[k], p[k - 1]);
  }
  EXPECT_THROW(fi_survival_probs(10, 0.5), domain_error);
  EXPECT_THROW(fi_survival_probs(10, 0.0), domain_error);
}

TEST(SdsGen, DeterministicAndLongMemory) {
  const auto a = sds_gen(1 << 14, 0.3, RngSpec{5});
  const auto b = sds_gen(1 << 14, 0.3, RngSpec{5});
  EXPECT_EQ(a.values, b.values);
  const auto g = gph_est(a);
  EXPECT_NEAR(g.d_hat, 0.3, 4.0 * g.std_error());
}

TEST(SdsGen, SingleShockPersistsForItsDuration) {
  // With T = 1 the only shock is alive at t = 0.
  const auto x = sds_gen(1, 0.3, 2.0, RngSpec{9});
  EXPECT_EQ(x.values, same_draws(1, 9, 2.0));
}

TEST(SdsGen, VanishingMemoryIsNearlyWhite) {
  const auto x = sds_gen(100000, 0.005, RngSpec{10});
  EXPECT_LT(std::abs(autocorrelation(x, 2).values[1]), 0.05);
}

TEST(CsaGenFinite, TracksTheLimitingAggregate) {
  // With N = T the finite aggregate and the MA form share their
  // correlation structure up to sampling error.
  const auto fin = csa_gen_finite(5000, 5000, 1.3, 1.5, RngSpec{13});
  const auto asy = csa_gen(5000, 1.3, 1.5, RngSpec{14});
  const auto a = autocorrelation(fin, 51).values, b = autocorrelation(asy, 51).values;
  double sup = 0.0;
  for (std::size_t k = 1; k <= 50; ++k)
    sup = std::max(sup, std::abs(a[k] - b[k]));
  EXPECT_LT(sup, 0.1);
}

TEST(Generators, SemiparametricSmokeTest) {
  constexpr std::size_t T = 100000;
  for (double d : {0.1, 0.25, 0.4}) {
    const std::vector<std::pair<std::string, Series>> cases{
        {"fi", fi_gen(T, d, RngSpec{50})}, {"sds", sds_gen(T, d, RngSpec{52})}};
    for (const auto &[name, x] : cases) {
      const auto g = gph_est(x), w = whittle_est(x), e = exact_whittle_est(x);
      EXPECT_NEAR(g.d_hat, d, 4.0 * g.std_error()) << name << " " << d;
      EXPECT_NEAR(w.d_hat, d, 4.0 * w.std_error()) << name << " " << d;
      EXPECT_NEAR(e.d_hat, d, 4.0 * e.std_error()) << name << " " << d;
    }
  }
}

TEST(Generators, CsaSmokeTestAtNarrowBandwidth) {
  // The aggregate's spectrum reaches its lambda^{-2d} slope only very close
  // to the origin (see CsaGen.SpectralSlopeApproachesD), so the default
  // T^0.8 bandwidth picks up the steeper mid-band slope. T^0.4 does not.
  constexpr std::size_t T = 100000;
  for (double d : {0.1, 0.25, 0.4}) {
    const auto x = csa_gen(T, 1.3, 2.0 * (1.0 - d), RngSpec{51});
    const auto g = gph_est(x, {.m = 0, .bandwidth_exponent = 0.4, .br = 0});
    const auto w = whittle_est(x, {.m = 0, .bandwidth_exponent = 0.4});
    const auto e = exact_whittle_est(x, {.m = 0, .bandwidth_exponent = 0.4});
    EXPECT_NEAR(g.d_hat, d, 4.0 * g.std_error()) << d;
    EXPECT_NEAR(w.d_hat, d, 4.0 * w.std_error()) << d;
    EXPECT_NEAR(e.d_hat, d, 4.0 * e.std_error()) << d;
  }
}

TEST(CsaGen, SpectralSlopeApproachesD) {
  // Local log-log slope of |sum_k phi_k e^{-ik lambda}|^2 for the MA filter
  // itself, at decreasing frequencies. It falls monotonically towards
  // 2d = 2 - q.
  constexpr std::size_t K = 1 << 20;
  const double q = 1.5, d = 1.0 - q / 2.0;
  std::vector<double> phi(K);
  for (std::size_t k = 0; k < K; ++k)
    phi[k] = oracle::csa_ma(k, 1.3, q);
  const auto X = dft(std::span<const double>(phi));
  double prev = 1.0;
  for (std::size_t j : {4096u, 256u, 16u, 2u}) {
    const double local = -0.5 * std::log(std::norm(X[2 * j]) / std::norm(X[j])) / std::log(2.0);
    EXPECT_LT(local, prev) << j;
    prev = local;
  }
  EXPECT_NEAR(prev, d, 0.03);
}
