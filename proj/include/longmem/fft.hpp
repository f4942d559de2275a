#pragma once

// In-house FFT kernels: iterative radix-2 transforms, Bluestein's chirp-z
// transform for arbitrary lengths, and truncated linear convolution.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "longmem/error.hpp"

namespace longmem {

using cplx = std::complex<double>;

namespace detail {

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n)
    p <<= 1;
  return p;
}

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place radix-2 transform; `a.size()` must be a power of two.
// Forward uses exp(-2 pi i jk/n); the inverse is unnormalised.
inline void fft_pow2(std::vector<cplx> &a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1)
    return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1)
      j ^= bit;
    j ^= bit;
    if (i < j)
      std::swap(a[i], a[j]);
  }

  // Twiddles evaluated directly (not by recurrence) to keep round-off at eps.
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<cplx> w(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k)
    w[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                               static_cast<double>(n));

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        // Spelled out: std::complex operator* goes through the
        // Annex G NaN-recovery path unless fast-math is on.
        const cplx u = a[i + k];
        const cplx b = a[i + k + half];
        const cplx t = w[k * stride];
        const cplx v(b.real() * t.real() - b.imag() * t.imag(),
                     b.real() * t.imag() + b.imag() * t.real());
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
}

} // namespace detail

// Forward DFT, X_k = sum_t x_t exp(-2 pi i k t / n), for any length.
// Powers of two go straight to radix-2; other lengths use Bluestein.
inline std::vector<cplx> dft(std::span<const cplx> x) {
  const std::size_t n = x.size();
  if (n == 0)
    return {};
  if (detail::is_pow2(n)) {
    std::vector<cplx> a(x.begin(), x.end());
    detail::fft_pow2(a, false);
    return a;
  }

  // Bluestein: jk = (j^2 + k^2 - (k-j)^2) / 2.
  const std::size_t m = detail::next_pow2(2 * n - 1);
  std::vector<cplx> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k^2 mod 2n keeps the angle argument small and exact.
    const std::size_t k2 = (k * k) % (2 * n);
    chirp[k] = std::polar(1.0, -std::numbers::pi * static_cast<double>(k2) /
                                   static_cast<double>(n));
  }
  std::vector<cplx> a(m, cplx{}), b(m, cplx{});
  for (std::size_t k = 0; k < n; ++k)
    a[k] = x[k] * chirp[k];
  b[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k)
    b[k] = b[m - k] = std::conj(chirp[k]);
  detail::fft_pow2(a, false);
  detail::fft_pow2(b, false);
  for (std::size_t i = 0; i < m; ++i)
    a[i] *= b[i];
  detail::fft_pow2(a, true);
  std::vector<cplx> out(n);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k)
    out[k] = a[k] * scale * chirp[k];
  return out;
}

inline std::vector<cplx> dft(std::span<const double> x) {
  std::vector<cplx> c(x.begin(), x.end());
  return dft(std::span<const cplx>(c));
}

// First T terms of the linear convolution y_t = sum_{k<=t} c_k x_{t-k}.
//
// Zero-pads to the next power of two >= 2T-1 and transforms both real
// inputs with a single complex FFT (x in the real part, c in the imaginary).
inline std::vector<double> fft_convolve(std::span<const double> x,
                                        std::span<const double> c) {
  if (x.size() != c.size())
    throw shape_error("fft_convolve: input lengths differ (" +
                      std::to_string(x.size()) + " vs " +
                      std::to_string(c.size()) + ")");
  const std::size_t T = x.size();
  if (T == 0)
    return {};
  const std::size_t n = detail::next_pow2(2 * T - 1);
  std::vector<cplx> z(n, cplx{});
  for (std::size_t t = 0; t < T; ++t)
    z[t] = cplx(x[t], c[t]);
  detail::fft_pow2(z, false);

  // X_k = (Z_k + conj Z_{n-k}) / 2, C_k = (Z_k - conj Z_{n-k}) / 2i,
  // so X_k C_k = (Z_k^2 - conj(Z_{n-k})^2) / 4i.
  std::vector<cplx> prod(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx zk = z[k];
    const cplx zc = std::conj(z[(n - k) & (n - 1)]);
    prod[k] = (zk * zk - zc * zc) * cplx(0.0, -0.25);
  }
  detail::fft_pow2(prod, true);
  std::vector<double> y(T);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t t = 0; t < T; ++t)
    y[t] = prod[t].real() * scale;
  return y;
}

} // namespace longmem
