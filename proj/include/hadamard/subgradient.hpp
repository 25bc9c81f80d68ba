#pragma once

// The B^p-subdifferential: v at x is a subgradient when, for the witness
// y = exp_p(-|v| eta) with ray(p, eta) asymptotic to ray(x, -v/|v|),
//
//   f(z) >= f(x) + H_p(z, y) - H_p(x, y)   for all z.

#include "hadamard/duality.hpp"
#include "hadamard/isometry.hpp"

#include <optional>

namespace hadamard {

struct SubgradientWitness {
  Point x;
  Tangent v;
  std::optional<Tangent> eta;  // absent when v = 0
  Point y;
};

/// v = 0 gives y = p.
SubgradientWitness witness_point(const Point& p, const Point& x, const Tangent& v);

struct SubgradientReport {
  SubgradientWitness witness;
  int samples = 0;
  double min_slack = 0;      // min of f(z) - f(x) - H_p(z,y) + H_p(x,y)
  Point min_z;
  double equality_residual = 0;  // f(x) + f*_p(y) - H_p(x,y)
  bool exact_conjugate = false;  // radial reduction used for f*_p(y)
  bool inequality_pass = false;
  bool equality_hard_failure = false;  // residual < -tol
  bool pass = false;
};

/// Sampled membership test: budget.n_samples points z around p within
/// budget.sample_radius (z = x always included), a simplex refinement from
/// the worst sample, and the Fenchel-Young equality residual at the witness.
SubgradientReport is_subgradient(const FunctionSpec& f, const Point& p, const Point& x,
                                 const Tangent& v, const SearchBudget& budget,
                                 ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// grad h(d(., p)) at x: -(h'(d)/d) log_x p, and 0 at x = p.
Tangent radial_subgradient(const HSpec& h, const Point& p, const Point& x);

/// d(y,p) u with u = -asymptote(x, ray(p, eta)).dir and eta = -log_p y / d(y,p).
/// Throws std::invalid_argument when y = p.
Tangent subgradient_from_equality(const FunctionSpec& f, const Point& p, const Point& x,
                                  const Point& y);

/// DI_b(u), after checking I(q) = p. Throws std::invalid_argument otherwise.
Tangent transport_subgradient(const IsometryRep& iso, const Point& p, const Point& q,
                              const Point& b, const Tangent& u);

}  // namespace hadamard
