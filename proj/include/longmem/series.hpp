#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "longmem/error.hpp"

namespace longmem {

enum class Origin { simulated, loaded };

// A univariate real-valued series. All generators produce one and every
// estimator accepts its values as a span.
struct Series {
  std::vector<double> values;
  std::optional<std::string> label;
  Origin origin = Origin::loaded;
  std::optional<std::uint64_t> seed;

  Series() = default;
  explicit Series(std::vector<double> v, Origin o = Origin::loaded,
                  std::optional<std::uint64_t> s = std::nullopt)
      : values(std::move(v)), origin(o), seed(s) {}

  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }
  double operator[](std::size_t t) const { return values[t]; }
  std::span<const double> span() const noexcept { return values; }
  operator std::span<const double>() const noexcept { return values; }
};

// Seed plus algorithm tag. Identical specs yield identical simulated series.
struct RngSpec {
  std::uint64_t seed = 0;
  std::string algorithm = "mt19937_64";
};

namespace detail {

inline std::mt19937_64 make_engine(const RngSpec &rng) {
  if (rng.algorithm != "mt19937_64")
    throw domain_error("unsupported RNG algorithm '" + rng.algorithm + "'");
  return std::mt19937_64(rng.seed);
}

inline void require_finite(std::span<const double> x, const char *who) {
  for (double v : x)
    if (!std::isfinite(v))
      throw domain_error(std::string(who) + ": series contains a non-finite value");
}

inline double mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x)
    s += v;
  return s / static_cast<double>(x.size());
}

inline std::vector<double> demeaned(std::span<const double> x) {
  const double m = mean(x);
  std::vector<double> out(x.begin(), x.end());
  for (double &v : out)
    v -= m;
  return out;
}

} // namespace detail

} // namespace longmem
