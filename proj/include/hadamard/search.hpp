#pragma once

// Derivative-free search utilities: golden section, Nelder-Mead, a grid plus
// simplex maximiser over the cylinder (unit sphere of T_pM) x [0, t_max], and
// finite-difference Riemannian gradients.

#include "hadamard/geometry.hpp"
#include "hadamard/grid_kernels.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace hadamard {

struct SearchBudget {
  double t_max = 12.0;          // truncation radius of ray-parameter searches
  int sphere_samples = 96;
  int t_samples = 64;
  int refine_iters = 200;
  double tol = 1e-6;
  double divergence_slack = 0.05;
  double sample_radius = 8.0;
  int n_samples = 1000;
  int max_doublings = 8;
  std::uint64_t seed = 0;       // sphere sampling in dimension > 3

  /// Throws std::invalid_argument on non-positive fields or t_samples < 2.
  void validate() const;
};

struct GoldenResult {
  double argmin;
  double min;
};

/// Minimises g on [lo, hi]. The bracket is shrunk to width <= tol; the
/// endpoints are also compared so boundary minima are returned exactly.
GoldenResult golden_section(const std::function<double(double)>& g, double lo, double hi,
                            double tol);

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value;
  int iterations;
};

/// Minimises f starting from the simplex x0 + steps_i e_i.
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const Eigen::VectorXd& steps,
                             int max_iters);

/// Sphere grid in coefficient space R^dim: angle grid for dim 2, Fibonacci
/// sphere for dim 3, seeded Gaussian directions above. dim 1 gives {+1, -1}.
std::vector<Eigen::VectorXd> sphere_directions(int dim, int count, std::uint64_t seed);

using CylinderObjective = std::function<double(const Tangent& v, double t)>;

struct CylinderResult {
  double value = 0;       // -inf when every grid cell was -inf
  double t = 0;
  Tangent v;              // unit tangent at p
  double grid_value = 0;  // best value of the grid stage alone
};

/// sup over unit v in T_pM and t in [0, budget.t_max] of obj(v, t).
///
/// Coarse grid (sphere_samples x t_samples), then Nelder-Mead in chart
/// coordinates (angle chart, t) from the best cell and once more from the
/// best cell of a different basin. Ties go to the smallest t, then the
/// lexicographically smallest direction coefficients. Throws
/// std::domain_error when obj returns NaN.
CylinderResult maximize_cylinder(const CylinderObjective& obj, const Point& p,
                                 const SearchBudget& budget,
                                 ExecutionPolicy policy = ExecutionPolicy::Parallel);

using SphereObjective = std::function<double(const Tangent& v)>;

struct SphereResult {
  double value = 0;
  Tangent v;
};

/// inf over unit v in T_pM of obj(v): sphere grid then Nelder-Mead.
SphereResult minimize_sphere(const SphereObjective& obj, const Point& p,
                             const SearchBudget& budget,
                             ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Central differences of g along exp_p(+-h e_i) over tangent_basis(p).
Tangent fd_gradient(const std::function<double(const Point&)>& g, const Point& p, double h);

}  // namespace hadamard
