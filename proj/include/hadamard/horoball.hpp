#pragma once

// Geodesic rays, Busemann functions and the H_p kernel.

#include "hadamard/geometry.hpp"
#include "hadamard/search.hpp"

namespace hadamard {

/// Unit-speed geodesic ray t -> exp(base, t * dir), t >= 0.
struct Ray {
  Point base;
  Tangent dir;  // unit, based at `base`
};

/// Ray(p, u / |u|). Throws std::invalid_argument for u = 0.
Ray make_ray(const Point& p, const Tangent& u);

Point ray_point(const Ray& r, double t);

/// Busemann function B(x) = lim_{t->inf} d(x, r(t)) - t.
///
/// Closed forms: Euclidean -<dir, x - base>; hyperbolic
/// (1/k) ln(-k^2 <x, base + dir/k>_L); products s1 B1 + s2 B2 over the factor
/// weights of dir; SPD -sum_i lambda_i ln D_i, with lambda the decreasing
/// eigenvalues of the whitened direction and D the pivots of X = U D U^T
/// (U unit upper triangular) in that eigenbasis.
double busemann(const Ray& r, const Point& x);

/// d(x, r(T)) - T, evaluated stably for large T (graded eigenproblem on SPD).
double ray_distance_excess(const Ray& r, const Point& x, double horizon);

struct NumericLimit {
  double value;
  double horizon;  // last T used
  int doublings;
};

/// Direct truncation of the Busemann limit with T doubling from
/// max(budget.t_max, 4 d(x, base)) and Romberg extrapolation in 1/T. Stops
/// when successive extrapolated values differ by less than budget.tol / 4,
/// on two consecutive doublings unless the extrapolation is at full order.
/// Throws ConvergenceFailure after budget.max_doublings doublings and
/// std::logic_error if the raw sequence ever increases.
NumericLimit busemann_numeric_limit(const Ray& r, const Point& x, const SearchBudget& budget);

inline double busemann_numeric(const Ray& r, const Point& x, const SearchBudget& budget) {
  return busemann_numeric_limit(r, x, budget).value;
}

/// The ray from q asymptotic to r. Closed forms on Euclidean, hyperbolic and
/// product spaces; on SPD the direction is the normalised negative gradient of
/// the Busemann function at q. Throws ConvergenceFailure when that gradient
/// is degenerate.
Ray asymptote(const Point& q, const Ray& r);

/// H_p(z, y) = d(z, p) B^p_{-log_p z}(y), and 0 when d(z, p) < 1e-12.
double h_kernel(const Point& p, const Point& z, const Point& y);

}  // namespace hadamard
