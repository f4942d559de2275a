#include <gtest/gtest.h>

#include <random>

#include "longmem/fft.hpp"
#include "oracles.hpp"

using namespace longmem;

namespace {
std::vector<double> noise(std::size_t n, unsigned seed) {
  std::mt19937_64 g(seed);
  std::normal_distribution<double> nd;
  std::vector<double> x(n);
  for (auto &v : x)
    v = nd(g);
  return x;
}
} // namespace

TEST(Fft, MatchesNaiveDftForAllSmallLengths) {
  for (std::size_t n = 1; n <= 40; ++n) {
    const auto x = noise(n, static_cast<unsigned>(n));
    const auto a = dft(x);
    const auto b = oracle::dft(x);
    for (std::size_t k = 0; k < n; ++k)
      EXPECT_NEAR(std::abs(a[k] - b[k]), 0.0, 1e-11) << "n=" << n << " k=" << k;
  }
}

TEST(Fft, BluesteinAtAwkwardLength) {
  const auto x = noise(663, 3);
  const auto a = dft(x);
  const auto b = oracle::dft(x);
  double worst = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k)
    worst = std::max(worst, std::abs(a[k] - b[k]));
  EXPECT_LT(worst, 1e-9);
}

TEST(Fft, Parseval) {
  const auto x = noise(1000, 9);
  const auto X = dft(x);
  double lhs = 0.0, rhs = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    lhs += x[t] * x[t];
    rhs += std::norm(X[t]);
  }
  EXPECT_NEAR(lhs, rhs / static_cast<double>(x.size()), 1e-9 * lhs);
}

TEST(Fft, ConvolutionMatchesDirectSum) {
  for (std::size_t n : {1u, 2u, 7u, 256u, 1000u}) {
    const auto x = noise(n, 1);
    const auto c = noise(n, 2);
    const auto y = fft_convolve(x, c);
    const auto z = oracle::convolve(x, c);
    EXPECT_LT(oracle::max_abs_diff(y, z), 1e-10) << n;
  }
}

TEST(Fft, ConvolutionRejectsLengthMismatch) {
  const std::vector<double> a(4, 1.0), b(5, 1.0);
  EXPECT_THROW(fft_convolve(a, b), shape_error);
  EXPECT_TRUE(fft_convolve(std::vector<double>{}, std::vector<double>{}).empty());
}
