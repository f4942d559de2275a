#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "longmem/error.hpp"

namespace longmem::detail {

struct OlsFit {
  Eigen::VectorXd coef;
  Eigen::VectorXd residuals;
  double rss = 0.0;
};

// Least squares through a column-pivoted QR; rank deficiency is an error.
inline OlsFit ols(const Eigen::MatrixXd &X, const Eigen::VectorXd &y) {
  if (X.rows() < X.cols())
    throw range_error("regression has fewer rows than regressors");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  qr.setThreshold(1e-10);
  if (qr.rank() < X.cols())
    throw rank_error("regressor matrix is rank deficient (rank " +
                     std::to_string(qr.rank()) + " of " +
                     std::to_string(X.cols()) + ")");
  OlsFit fit;
  fit.coef = qr.solve(y);
  fit.residuals = y - X * fit.coef;
  fit.rss = fit.residuals.squaredNorm();
  return fit;
}

// Slope and intercept of y on x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

inline LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd Y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    X(i, 0) = 1.0;
    X(i, 1) = x[static_cast<std::size_t>(i)];
    Y(i) = y[static_cast<std::size_t>(i)];
  }
  const auto fit = ols(X, Y);
  return {fit.coef(1), fit.coef(0)};
}

} // namespace longmem::detail
