#include "hadamard/linalg.hpp"

#include <limits>

namespace hadamard::linalg {

SymEigen jacobi_eigen(const Eigen::MatrixXd& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("jacobi_eigen: matrix not square");
  Eigen::MatrixXd a = symmetrize(input);
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  jacobi_diagonalize(a, &v);
  return {a.diagonal(), v};
}

Eigen::MatrixXd expm_sym(const Eigen::MatrixXd& x) {
  return sym_fn(x, [](double l) { return std::exp(l); });
}

Eigen::MatrixXd logm_spd(const Eigen::MatrixXd& x) {
  return sym_fn(x, [](double l) {
    return l > 0 ? std::log(l) : std::numeric_limits<double>::quiet_NaN();
  });
}

Eigen::MatrixXd sqrtm_spd(const Eigen::MatrixXd& x) {
  return sym_fn(x, [](double l) {
    return l >= 0 ? std::sqrt(l) : std::numeric_limits<double>::quiet_NaN();
  });
}

}  // namespace hadamard::linalg
