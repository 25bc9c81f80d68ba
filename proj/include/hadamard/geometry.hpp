#pragma once

// Hadamard spaces: Euclidean R^n, hyperbolic H^n_k (hyperboloid model), SPD(n)
// with the affine-invariant metric, and binary Riemannian products.
//
// Coordinate layouts:
//   Euclidean   n entries
//   Hyperbolic  n+1 ambient Minkowski entries, time coordinate last,
//               <x,y>_L = sum_{i<=n} x_i y_i - x_{n+1} y_{n+1}, <x,x>_L = -1/k^2
//   SPD         n*n entries of the symmetric matrix (column-major)
//   Product     factor coordinates concatenated

#include <Eigen/Dense>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hadamard {

enum class SpaceKind { Euclidean, Hyperbolic, SPD, Product };

/// Sectional curvature in [-b^2, -a^2].
struct CurvatureBounds {
  double a = 0;
  double b = 0;
};

class SpaceDescriptor {
 public:
  /// Placeholder descriptor (zero-dimensional); use the factories.
  SpaceDescriptor() = default;

  static SpaceDescriptor euclidean(int n);
  static SpaceDescriptor hyperbolic(int n, double k = 1.0);
  static SpaceDescriptor spd(int order);
  static SpaceDescriptor product(const SpaceDescriptor& first, const SpaceDescriptor& second);

  SpaceKind kind() const { return kind_; }
  /// Manifold dimension.
  int dim() const { return dim_; }
  /// Curvature scale k (sectional curvature -k^2); hyperbolic only.
  double k() const { return k_; }
  /// Matrix order n; SPD only.
  int order() const { return order_; }
  /// Length of the coordinate vector.
  int ambient_size() const { return ambient_; }

  const SpaceDescriptor& first() const;
  const SpaceDescriptor& second() const;

  const std::optional<CurvatureBounds>& curvature_bounds() const { return bounds_; }
  SpaceDescriptor with_bounds(CurvatureBounds bounds) const;

  /// Short human-readable name such as "H2(k=1)" or "SPD(3)".
  std::string name() const;

  friend bool operator==(const SpaceDescriptor& a, const SpaceDescriptor& b);

 private:
  SpaceKind kind_ = SpaceKind::Euclidean;
  int dim_ = 0;
  double k_ = 1.0;
  int order_ = 0;
  int ambient_ = 0;
  std::shared_ptr<const std::pair<SpaceDescriptor, SpaceDescriptor>> factors_;
  std::optional<CurvatureBounds> bounds_;
};

struct Point {
  SpaceDescriptor space;
  Eigen::VectorXd coords;
};

struct Tangent {
  Point base;
  Eigen::VectorXd vec;
};

/// Builds a point and checks membership. Throws InvalidPoint.
Point make_point(const SpaceDescriptor& space, Eigen::VectorXd coords);
Point make_spd_point(const SpaceDescriptor& space, const Eigen::MatrixXd& x);
/// Builds a tangent and checks tangency. Throws NotTangent.
Tangent make_tangent(const Point& base, Eigen::VectorXd vec);
Tangent zero_tangent(const Point& base);

void validate_point(const Point& x);
void validate_tangent(const Tangent& v);

/// Canonical reference point: 0, (0,...,0,1/k), I, or the pair of origins.
Point origin(const SpaceDescriptor& space);

/// Minkowski bilinear form on ambient hyperboloid coordinates.
double minkowski(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

/// Projects hyperboloid coordinates back onto the upper sheet <x,x>_L = -1/k^2.
Eigen::VectorXd renormalize_hyperbolic(const Eigen::VectorXd& x, double k);

/// Symmetric-matrix view of SPD coordinates.
Eigen::MatrixXd as_matrix(const Eigen::VectorXd& coords, int order);
Eigen::VectorXd from_matrix(const Eigen::MatrixXd& m);

// Factor slicing for products.
Point factor_point(const Point& x, int which);
Tangent factor_tangent(const Tangent& v, int which);
Point join_points(const SpaceDescriptor& space, const Point& a, const Point& b);
Tangent join_tangents(const Point& base, const Tangent& a, const Tangent& b);

double dist(const Point& x, const Point& y);
Point exp(const Point& p, const Tangent& v);
Tangent log(const Point& p, const Point& q);
double inner(const Point& p, const Tangent& u, const Tangent& v);
double norm(const Tangent& v);

/// Orthonormal basis of T_pM, deterministic in p.
std::vector<Tangent> tangent_basis(const Point& p);

/// Sectional curvature of span{u, v}. Throws std::invalid_argument when
/// u and v are (numerically) parallel.
double sectional(const Point& p, const Tangent& u, const Tangent& v);

/// Ricci curvature in the unit direction v, normalised by dim - 1.
double ricci_dir(const Point& p, const Tangent& v);
/// Same, with an explicit orthonormal completion of v (dim - 1 vectors).
double ricci_dir(const Point& p, const Tangent& v, const std::vector<Tangent>& completion);

/// Orthonormal completion of a unit vector using tangent_basis(p).
std::vector<Tangent> orthonormal_completion(const Point& p, const Tangent& v);

// Tangent arithmetic (same base assumed).
Tangent operator+(const Tangent& a, const Tangent& b);
Tangent operator-(const Tangent& a, const Tangent& b);
Tangent operator*(double s, const Tangent& a);
Tangent operator-(const Tangent& a);

/// Coefficients of v in tangent_basis(p) and back.
Eigen::VectorXd to_coefficients(const std::vector<Tangent>& basis, const Tangent& v);
Tangent from_coefficients(const Point& p, const std::vector<Tangent>& basis,
                          const Eigen::VectorXd& coeffs);

void require_same_space(const SpaceDescriptor& a, const SpaceDescriptor& b, const char* where);

}  // namespace hadamard
