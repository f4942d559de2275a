#pragma once

// Derivative-free minimisers used by the estimators: Brent's bounded
// scalar method and a box-projected Nelder-Mead simplex.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>

namespace longmem {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool at_bound = false; // the minimiser lies within tolerance of a bound
};

// Brent's golden-section / parabolic minimiser on [lo, hi] with absolute
// tolerance `xtol` in the argument. Non-finite objective values are
// treated as +inf.
template <class F>
ScalarMinimum minimize_bounded(F &&f, double lo, double hi, double xtol = 1e-8,
                               std::size_t max_iter = 500) {
  const double golden = 0.5 * (3.0 - std::sqrt(5.0));
  const double sqrt_eps = std::sqrt(std::numeric_limits<double>::epsilon());
  std::size_t evals = 0;
  auto eval = [&](double x) {
    ++evals;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  double a = lo, b = hi;
  double x = a + golden * (b - a);
  double w = x, v = x;
  double fx = eval(x);
  double fw = fx, fv = fx;
  double d = 0.0, e = 0.0;

  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    const double mid = 0.5 * (a + b);
    const double tol1 = sqrt_eps * std::abs(x) + xtol / 3.0;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - mid) <= tol2 - 0.5 * (b - a))
      break;

    bool golden_step = true;
    if (std::abs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0)
        p = -p;
      q = std::abs(q);
      const double etemp = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * etemp) && p > q * (a - x) &&
          p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2)
          d = x < mid ? tol1 : -tol1;
        golden_step = false;
      }
    }
    if (golden_step) {
      e = (x >= mid) ? a - x : b - x;
      d = golden * e;
    }

    const double u = std::abs(d) >= tol1 ? x + d : x + (d > 0.0 ? tol1 : -tol1);
    const double fu = eval(u);
    if (fu <= fx) {
      if (u >= x)
        a = x;
      else
        b = x;
      v = w, fv = fw;
      w = x, fw = fx;
      x = u, fx = fu;
    } else {
      if (u < x)
        a = u;
      else
        b = u;
      if (fu <= fw || w == x) {
        v = w, fv = fw;
        w = u, fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u, fv = fu;
      }
    }
  }

  ScalarMinimum out;
  out.x = x;
  out.value = fx;
  out.evaluations = evals;
  const double edge = 10.0 * (xtol + sqrt_eps * std::abs(x));
  out.at_bound = (x - lo) <= edge || (hi - x) <= edge;
  return out;
}

struct SimplexMinimum {
  std::array<double, 2> x{};
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
  std::array<bool, 2> at_lower{};
  std::array<bool, 2> at_upper{};
};

// Nelder-Mead on a two-dimensional box. Trial points are projected onto
// the box, so iterates can settle exactly on a face.
template <class F>
SimplexMinimum minimize_simplex_box(F &&f, std::array<double, 2> start,
                                    std::array<double, 2> lower,
                                    std::array<double, 2> upper,
                                    double ftol = 1e-12, double xtol = 1e-9,
                                    std::size_t max_iter = 5000) {
  using Pt = std::array<double, 2>;
  std::size_t evals = 0;
  auto project = [&](Pt p) {
    for (int i = 0; i < 2; ++i)
      p[i] = std::clamp(p[i], lower[i], upper[i]);
    return p;
  };
  auto eval = [&](const Pt &p) {
    ++evals;
    const double v = f(p);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  std::array<Pt, 3> s;
  s[0] = project(start);
  for (int i = 0; i < 2; ++i) {
    Pt p = s[0];
    const double step = p[i] != 0.0 ? 0.05 * std::abs(p[i]) : 0.00025;
    p[i] += step;
    if (p[i] > upper[i])
      p[i] = s[0][i] - step;
    s[i + 1] = project(p);
  }
  std::array<double, 3> fs{eval(s[0]), eval(s[1]), eval(s[2])};

  auto combine = [&](const Pt &c, const Pt &p, double t) {
    return project(Pt{c[0] + t * (p[0] - c[0]), c[1] + t * (p[1] - c[1])});
  };

  bool converged = false;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return fs[i] < fs[j]; });
    std::array<Pt, 3> ss{s[idx[0]], s[idx[1]], s[idx[2]]};
    std::array<double, 3> ff{fs[idx[0]], fs[idx[1]], fs[idx[2]]};
    s = ss;
    fs = ff;

    double size = 0.0;
    for (int k = 1; k < 3; ++k)
      for (int i = 0; i < 2; ++i)
        size = std::max(size, std::abs(s[k][i] - s[0][i]));
    const double spread = std::abs(fs[2] - fs[0]);
    if (size <= xtol && spread <= ftol * (1.0 + std::abs(fs[0]))) {
      converged = true;
      break;
    }

    const Pt c{0.5 * (s[0][0] + s[1][0]), 0.5 * (s[0][1] + s[1][1])};
    const Pt xr = combine(c, s[2], -1.0);
    const double fr = eval(xr);
    if (fr < fs[0]) {
      const Pt xe = combine(c, s[2], -2.0);
      const double fe = eval(xe);
      if (fe < fr)
        s[2] = xe, fs[2] = fe;
      else
        s[2] = xr, fs[2] = fr;
    } else if (fr < fs[1]) {
      s[2] = xr, fs[2] = fr;
    } else {
      const bool outside = fr < fs[2];
      const Pt xc = outside ? combine(c, s[2], -0.5) : combine(c, s[2], 0.5);
      const double fc = eval(xc);
      if (fc < std::min(fr, fs[2])) {
        s[2] = xc, fs[2] = fc;
      } else {
        for (int k = 1; k < 3; ++k) {
          s[k] = combine(s[0], s[k], 0.5);
          fs[k] = eval(s[k]);
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < 3; ++k)
    if (fs[k] < fs[best])
      best = k;
  SimplexMinimum out;
  out.x = s[best];
  out.value = fs[best];
  out.evaluations = evals;
  out.converged = converged;
  for (int i = 0; i < 2; ++i) {
    const double edge = 1e-6 * std::max(1.0, std::abs(out.x[i]));
    out.at_lower[i] = out.x[i] - lower[i] <= edge;
    out.at_upper[i] = upper[i] - out.x[i] <= edge;
  }
  return out;
}

} // namespace longmem
