#include <gtest/gtest.h>

#include <thread>

#include "longmem/bench.hpp"
#include "oracles.hpp"

using namespace longmem;

TEST(TimeFn, NoOpIsFast) {
  const auto r = time_fn("noop", [] {}, 50);
  EXPECT_EQ(r.reps, 50u);
  EXPECT_LT(r.median_ns, 1e5);
  EXPECT_LE(r.min_ns, r.median_ns);
}

TEST(TimeFn, SleepIsMeasured) {
  const auto r = time_fn("sleep", [] { std::this_thread::sleep_for(std::chrono::milliseconds(10)); },
                         5, 0);
  EXPECT_GE(r.median_ns, 9e6);
  EXPECT_LE(r.median_ns, 30e6);
  EXPECT_GE(r.mean_ns, r.min_ns);
}

TEST(TimeFn, CountsCallsAndPropagatesErrors) {
  int calls = 0;
  time_fn("count", [&] { ++calls; }, 7, 3);
  EXPECT_EQ(calls, 10);
  EXPECT_THROW(time_fn("none", [] {}, 0), range_error);
  EXPECT_THROW(time_fn("throws", [] { throw numerical_error("boom"); }, 3), numerical_error);
}

TEST(Baselines, AgreeWithLibrary) {
  const auto a = fi_ma_coefs_cumprod(500, 0.3);
  const auto b = fi_ma_coefs(500, 0.3).values;
  EXPECT_LT(oracle::max_rel_diff(a, b), 1e-12);
  const auto x = fi_gen(700, 0.2, RngSpec{1}).values;
  const auto y = fracdiff_naive(x, 0.4);
  EXPECT_LT(oracle::max_abs_diff(y, oracle::convolve(x, detail::fi_ar_values(700, 0.4))), 1e-12);
  EXPECT_LT(oracle::max_abs_diff(y, fracdiff(x, 0.4).values), 1e-10);
}

TEST(Suites, RunAndReport) {
  for (const auto &name : bench_suites()) {
    const auto rep = run_bench_suite(name, 256, 2);
    EXPECT_EQ(rep.suite, name);
    EXPECT_GE(rep.results.size(), 2u);
    for (const auto &r : rep.results) {
      EXPECT_EQ(r.sample_size, 256u);
      EXPECT_GT(r.mean_ns, 0.0);
    }
  }
  EXPECT_THROW(run_bench_suite("nope", 256, 2), domain_error);
  EXPECT_THROW(run_bench_suite("coef-recursion", 8, 2), range_error);
}
