#pragma once

// Toeplitz machinery for the Gaussian likelihood and Yule-Walker
// forecasting: Durbin-Levinson prediction-error decomposition, a
// Levinson solver, and an O(T log T) exact path for FI(d) correlations.

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "longmem/error.hpp"
#include "longmem/fft.hpp"

namespace longmem {

// Symmetric Toeplitz matrix given by its first row rho(0..T-1).
struct ToeplitzGram {
  std::vector<double> first_row;

  std::size_t size() const noexcept { return first_row.size(); }
};

struct LoglikTerms {
  double logdet = 0.0;   // log |Gamma|
  double quadform = 0.0; // x' Gamma^{-1} x
};

// log|Gamma| and x' Gamma^{-1} x through one-step prediction errors:
// logdet = sum log v_t, quadform = sum e_t^2 / v_t.
inline LoglikTerms toeplitz_loglik_terms(const ToeplitzGram &gram,
                                         std::span<const double> x) {
  const auto &r = gram.first_row;
  const std::size_t T = x.size();
  if (r.size() != T)
    throw shape_error("toeplitz_loglik_terms: gram of size " + std::to_string(r.size()) +
                      " for a series of length " + std::to_string(T));
  if (T == 0)
    throw empty_request_error("toeplitz_loglik_terms: empty series");
  if (!(r[0] > 0.0))
    throw numerical_error("toeplitz_loglik_terms: rho(0) must be positive");

  LoglikTerms out;
  double v = r[0];
  out.logdet = std::log(v);
  out.quadform = x[0] * x[0] / v;

  std::vector<double> phi(T, 0.0), prev(T, 0.0);
  for (std::size_t t = 1; t < T; ++t) {
    double num = r[t];
    for (std::size_t j = 1; j < t; ++j)
      num -= prev[j] * r[t - j];
    const double k = num / v;
    phi[t] = k;
    for (std::size_t j = 1; j < t; ++j)
      phi[j] = prev[j] - k * prev[t - j];
    v *= (1.0 - k) * (1.0 + k);
    if (!(v > 0.0))
      throw numerical_error("toeplitz_loglik_terms: matrix not positive definite at order " +
                            std::to_string(t));
    double pred = 0.0;
    for (std::size_t j = 1; j <= t; ++j)
      pred += phi[j] * x[t - j];
    const double e = x[t] - pred;
    out.logdet += std::log(v);
    out.quadform += e * e / v;
    std::copy(phi.begin() + 1, phi.begin() + static_cast<std::ptrdiff_t>(t) + 1,
              prev.begin() + 1);
  }
  return out;
}

// Solves the order-k Yule-Walker system Toeplitz(rho_0..rho_{k-1}) psi =
// (rho_1..rho_k) by Levinson-Durbin. Returns psi_1..psi_k.
inline std::vector<double> yule_walker(std::span<const double> rho, std::size_t k) {
  if (k == 0)
    throw empty_request_error("yule_walker: order must be positive");
  if (rho.size() < k + 1)
    throw range_error("yule_walker: need rho(0..k), got " + std::to_string(rho.size()) +
                      " values for order " + std::to_string(k));
  if (!(rho[0] > 0.0))
    throw numerical_error("yule_walker: rho(0) must be positive");

  std::vector<double> phi(k + 1, 0.0), prev(k + 1, 0.0);
  double v = rho[0];
  for (std::size_t t = 1; t <= k; ++t) {
    double num = rho[t];
    for (std::size_t j = 1; j < t; ++j)
      num -= prev[j] * rho[t - j];
    const double refl = num / v;
    phi[t] = refl;
    for (std::size_t j = 1; j < t; ++j)
      phi[j] = prev[j] - refl * prev[t - j];
    v *= (1.0 - refl) * (1.0 + refl);
    if (!(v > 0.0))
      throw numerical_error("yule_walker: autocorrelations not positive definite at order " +
                            std::to_string(t));
    std::copy(phi.begin() + 1, phi.begin() + static_cast<std::ptrdiff_t>(t) + 1,
              prev.begin() + 1);
  }
  return {phi.begin() + 1, phi.end()};
}

namespace detail {

// Exact likelihood terms for the FI(d) correlation matrix in O(T log T).
//
// FI(d) has closed-form partial autocorrelations phi_tt = d / (t - d), so
// v_t = v_{t-1} (1 - phi_tt^2) and log|R| = sum_t log v_t. The order-n
// predictor is also closed form, phi_{n,1} = n d / (n - d) and
//   phi_{n,j+1} = phi_{n,j} (n - j)(j - d) / ((j + 1)(n - d - j)),
// and the Gohberg-Semencul formula R^{-1} = (A A' - B B') / v_n turns the
// quadratic form into two triangular Toeplitz products, done by FFT.
// A has first column a = (1, -phi_{n,1}, ..., -phi_{n,n}); B has first
// column (0, a_n, ..., a_1).
inline LoglikTerms fi_loglik_terms(double d, std::span<const double> x) {
  const std::size_t T = x.size();
  LoglikTerms out;
  if (T == 0)
    return out;
  double v = 1.0;
  for (std::size_t t = 1; t < T; ++t) {
    const double k = d / (static_cast<double>(t) - d);
    v *= (1.0 - k) * (1.0 + k);
    out.logdet += std::log(v);
  }
  if (T == 1) {
    out.quadform = x[0] * x[0];
    return out;
  }

  const std::size_t n = T - 1;
  const double nd = static_cast<double>(n);
  std::vector<double> a(T);
  a[0] = 1.0;
  double phi = nd * d / (nd - d);
  a[1] = -phi;
  for (std::size_t j = 1; j < n; ++j) {
    const double jd = static_cast<double>(j);
    phi *= (nd - jd) * (jd - d) / ((jd + 1.0) * (nd - d - jd));
    a[j + 1] = -phi;
  }

  // (A'x)_i = sum_k a_k x_{i+k}; with y the reversal of x this is
  // (a * y)_{n-i}. Likewise (B'x)_i = sum_{k>=1} a_{T-k} x_{i+k} = (b * y)_{n-i}
  // with b_k = a_{T-k} for k >= 1, b_0 = 0.
  std::vector<double> y(x.rbegin(), x.rend());
  std::vector<double> b(T, 0.0);
  for (std::size_t k = 1; k < T; ++k)
    b[k] = a[T - k];
  const auto ay = fft_convolve(y, a);
  const auto by = fft_convolve(y, b);
  double sa = 0.0, sb = 0.0;
  for (std::size_t i = 0; i < T; ++i) {
    sa += ay[i] * ay[i];
    sb += by[i] * by[i];
  }
  out.quadform = (sa - sb) / v;
  return out;
}

} // namespace detail

} // namespace longmem
