#pragma once

// Congruence helpers shared by the SPD code paths. X = L L^T.

#include "hadamard/errors.hpp"
#include "hadamard/linalg.hpp"

#include <Eigen/Dense>

namespace hadamard::detail {

inline Eigen::MatrixXd cholesky_factor(const Eigen::MatrixXd& x) {
  Eigen::LLT<Eigen::MatrixXd> llt(x);
  if (llt.info() != Eigen::Success) throw InvalidPoint("SPD matrix is not positive definite");
  return llt.matrixL();
}

// L^{-1} A L^{-T}
inline Eigen::MatrixXd whiten(const Eigen::MatrixXd& l, const Eigen::MatrixXd& a) {
  const auto lower = l.triangularView<Eigen::Lower>();
  Eigen::MatrixXd tmp = lower.solve(a);
  Eigen::MatrixXd out = lower.solve(tmp.transpose());
  return linalg::symmetrize(out);
}

// L A L^T
inline Eigen::MatrixXd unwhiten(const Eigen::MatrixXd& l, const Eigen::MatrixXd& a) {
  return linalg::symmetrize(l * a * l.transpose());
}

}  // namespace hadamard::detail
