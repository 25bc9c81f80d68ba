#pragma once

// Matrix representations of isometries and their differentials.

#include "hadamard/geometry.hpp"

#include <cstdint>
#include <vector>

namespace hadamard {

enum class IsometryKind {
  EuclideanRigid,  // x -> Q x + b
  Lorentz,         // x -> A x with A^T J A = J, A_{n+1,n+1} > 0
  SPDCongruence,   // X -> A X A^T
  SPDInverse,      // X -> X^{-1}
  ProductPair,     // (I1, I2) acting factor-wise
  Composite,       // parts[0] o parts[1] o ... ; empty list is the identity
};

struct IsometryRep {
  SpaceDescriptor space;
  IsometryKind kind = IsometryKind::Composite;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd offset;
  std::vector<IsometryRep> parts;

  static IsometryRep identity(const SpaceDescriptor& space);
  static IsometryRep euclidean_rigid(const SpaceDescriptor& space, const Eigen::MatrixXd& q,
                                     const Eigen::VectorXd& b);
  /// Re-orthonormalises under J when the Lorentz relation drifts past 1e-10;
  /// rejects drift beyond 1e-8.
  static IsometryRep lorentz(const SpaceDescriptor& space, const Eigen::MatrixXd& a);
  static IsometryRep spd_congruence(const SpaceDescriptor& space, const Eigen::MatrixXd& a);
  static IsometryRep spd_inverse(const SpaceDescriptor& space);
  static IsometryRep product_pair(const SpaceDescriptor& space, const IsometryRep& first,
                                  const IsometryRep& second);
};

/// Checks the matrix constraints (orthogonality, Lorentz relation,
/// conditioning below 1e8). Throws std::invalid_argument.
void validate(const IsometryRep& iso);

/// Largest violation of the representation's matrix constraint.
double constraint_defect(const IsometryRep& iso);

Point apply(const IsometryRep& iso, const Point& x);
Tangent differential(const IsometryRep& iso, const Point& b, const Tangent& u);
IsometryRep inverse(const IsometryRep& iso);
/// first o second (second is applied first).
IsometryRep compose(const IsometryRep& first, const IsometryRep& second);

/// Seeded draw: Euclidean rotation plus translation; hyperbolic rotation
/// composed with a boost of rapidity in [0, 2]; SPD congruence with
/// condition number at most 10; factor-wise on products.
IsometryRep random_isometry(const SpaceDescriptor& space, std::uint64_t seed);

/// Boost of rapidity `rapidity` mixing spatial axis `axis` with time, acting
/// on R^{n+1}.
Eigen::MatrixXd lorentz_boost(int n, int axis, double rapidity);

/// Spatial rotation R (n x n, orthogonal) embedded in a Lorentz matrix.
Eigen::MatrixXd lorentz_rotation(const Eigen::MatrixXd& r);

}  // namespace hadamard
