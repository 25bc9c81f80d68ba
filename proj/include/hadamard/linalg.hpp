#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hadamard::linalg {

struct SymEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // columns are eigenvectors
};

/// Cyclic Jacobi sweeps on a symmetric matrix, in place. Accumulates the
/// rotations into *v when v is non-null. Rotations are skipped when
/// |a_pq| <= eps * sqrt(|a_pp a_qq|).
template <class Scalar>
void jacobi_diagonalize(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>* v) {
  using std::abs;
  using std::sqrt;
  const Eigen::Index n = a.rows();
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar tiny = std::numeric_limits<Scalar>::min();
  constexpr int max_sweeps = 80;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar app = a(p, p);
        const Scalar aqq = a(q, q);
        if (abs(apq) <= eps * sqrt(abs(app) * abs(aqq)) || abs(apq) < tiny) {
          a(p, q) = a(q, p) = Scalar(0);
          continue;
        }
        rotated = true;
        // Rutishauser's stable rotation.
        const Scalar theta = (aqq - app) / (Scalar(2) * apq);
        Scalar t;
        if (abs(theta) > Scalar(1e150)) {
          t = Scalar(0.5) / theta;
        } else {
          t = (theta >= 0 ? Scalar(1) : Scalar(-1)) / (abs(theta) + sqrt(theta * theta + Scalar(1)));
        }
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = Scalar(0);
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Scalar arp = a(r, p);
          const Scalar arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        if (v) {
          for (Eigen::Index r = 0; r < n; ++r) {
            const Scalar vrp = (*v)(r, p);
            const Scalar vrq = (*v)(r, q);
            (*v)(r, p) = c * vrp - s * vrq;
            (*v)(r, q) = s * vrp + c * vrq;
          }
        }
      }
    }
    if (!rotated) break;
  }
}

/// Cyclic Jacobi eigensolver for a symmetric matrix.
///
/// Rotations are skipped when |a_pq| <= eps * sqrt(|a_pp a_qq|). For positive
/// definite input this relative test keeps small eigenvalues of strongly
/// graded matrices accurate to working precision, which the SPD ray
/// computations rely on.
SymEigen jacobi_eigen(const Eigen::MatrixXd& a);

/// Applies `fn` to the eigenvalues of a symmetric matrix.
/// Throws std::domain_error when fn is not finite at some eigenvalue.
template <class Fn>
Eigen::MatrixXd sym_fn(const Eigen::MatrixXd& x, Fn&& fn) {
  const SymEigen eig = jacobi_eigen(x);
  Eigen::VectorXd mapped(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    mapped(i) = fn(eig.values(i));
    if (!std::isfinite(mapped(i))) {
      throw std::domain_error("sym_fn: function undefined at eigenvalue " +
                              std::to_string(eig.values(i)));
    }
  }
  return eig.vectors * mapped.asDiagonal() * eig.vectors.transpose();
}

Eigen::MatrixXd expm_sym(const Eigen::MatrixXd& x);
Eigen::MatrixXd logm_spd(const Eigen::MatrixXd& x);
Eigen::MatrixXd sqrtm_spd(const Eigen::MatrixXd& x);

inline Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& x) {
  return 0.5 * (x + x.transpose());
}

/// Max absolute asymmetry |x_ij - x_ji|.
inline double asymmetry(const Eigen::MatrixXd& x) {
  return (x - x.transpose()).cwiseAbs().maxCoeff();
}

}  // namespace hadamard::linalg
