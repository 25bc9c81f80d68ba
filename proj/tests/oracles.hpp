#pragma once

// Reference formulas written independently of the library: Eigen's own
// eigensolvers, determinant ratios, and textbook closed forms.

#include "hadamard/geometry.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace oracle {

inline long double minkowski_ld(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const Eigen::Index n = x.size() - 1;
  long double s = 0;
  for (Eigen::Index i = 0; i < n; ++i) s += static_cast<long double>(x(i)) * y(i);
  return s - static_cast<long double>(x(n)) * y(n);
}

inline double hyperbolic_dist(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double k) {
  const long double c = -static_cast<long double>(k) * k * minkowski_ld(x, y);
  return static_cast<double>(std::acosh(std::max(1.0L, c)) / k);
}

// (1/k) ln(-k^2 <x, base + dir/k>).
inline double hyperbolic_busemann(const Eigen::VectorXd& base, const Eigen::VectorXd& dir,
                                  const Eigen::VectorXd& x, double k) {
  const Eigen::VectorXd xi = base + dir / k;
  return static_cast<double>(std::log(-static_cast<long double>(k) * k * minkowski_ld(x, xi)) / k);
}

inline Eigen::MatrixXd mat(const hadamard::Point& x) {
  const int n = x.space.order();
  return Eigen::Map<const Eigen::MatrixXd>(x.coords.data(), n, n);
}

// sqrt(sum ln^2 lambda_i) over generalised eigenvalues of (Y, X).
inline double spd_dist(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(y, x);
  double s = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = std::log(es.eigenvalues()(i));
    s += l * l;
  }
  return std::sqrt(s);
}

// Busemann function of the ray t -> X^{1/2} expm(t W) X^{1/2}, W the whitened
// unit direction. In the eigenbasis of W (eigenvalues decreasing) the pivots
// of Y' = U D U^T, U unit upper triangular, are ratios of trailing principal
// minors, and B(Y) = -sum lambda_i ln D_i.
inline double spd_busemann(const Eigen::MatrixXd& x0, const Eigen::MatrixXd& v,
                           const Eigen::MatrixXd& y) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sx(x0);
  const Eigen::MatrixXd isq =
      sx.eigenvectors() * sx.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
      sx.eigenvectors().transpose();
  const Eigen::MatrixXd w = isq * v * isq;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sw(0.5 * (w + w.transpose()));
  const Eigen::Index n = w.rows();
  // Eigen sorts increasing; reverse.
  Eigen::MatrixXd q(n, n);
  Eigen::VectorXd lam(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    q.col(i) = sw.eigenvectors().col(n - 1 - i);
    lam(i) = sw.eigenvalues()(n - 1 - i);
  }
  const Eigen::MatrixXd a = q.transpose() * isq * y * isq * q;
  double out = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double num = a.bottomRightCorner(n - i, n - i).determinant();
    const double den = i + 1 < n ? a.bottomRightCorner(n - i - 1, n - i - 1).determinant() : 1.0;
    out -= lam(i) * std::log(num / den);
  }
  return out;
}

inline double nonlinearity(double d, double k) { return -(d / k) * std::log(std::cosh(k * d / 2)); }

}  // namespace oracle
