#pragma once

// Affine functions, zero-Ricci directions and the SPD splitting
// SPD(n) = SL-part x R.

#include "hadamard/functions.hpp"
#include "hadamard/search.hpp"

#include <cstdint>

namespace hadamard {

struct AffinityReport {
  int geodesics = 0;
  double max_second_difference = 0;  // max |f(g(t+h)) - 2 f(g(t)) + f(g(t-h))|
  double gradient_norm_mean = 0;
  double gradient_norm_stddev = 0;
  Point witness_base;  // geodesic g(t) = exp(witness_base, t witness_dir)
  Tangent witness_dir;
  double witness_t = 0;
  bool affine = false;  // max second difference <= 1e-6
};

/// Seeded unit-speed geodesics through points within distance 2 of the
/// origin; t in {-2, -1.75, ..., 2} with h = 0.25. Gradient norms by central
/// differences at each geodesic's midpoint.
AffinityReport affinity_report(const FunctionSpec& f, const SpaceDescriptor& space,
                               int n_geodesics, std::uint64_t seed,
                               ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Second difference of f along exp(base, t dir) at t with step h.
double second_difference(const FunctionSpec& f, const Point& base, const Tangent& dir, double t,
                         double h);

struct ZeroRicciResult {
  double min_abs_ricci = 0;
  Tangent argmin;  // unit
};

/// Minimises |Ric_p(v)| over unit v. Throws std::invalid_argument for dim < 2.
ZeroRicciResult zero_ricci_direction(const Point& p, const SearchBudget& budget,
                                     ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// |d(X,Y)^2 - d(X~,Y~)^2 - (s_X - s_Y)^2| with Z~ = Z / det(Z)^{1/n} and
/// s_Z = ln det(Z) / sqrt(n).
double splitting_check_spd(const Point& x, const Point& y);

struct GramProbe {
  int geodesics = 0;
  double min_second_difference = 0;
  double max_abs_second_difference = 0;
  Point witness_base;  // geodesic attaining the minimum
  Tangent witness_dir;
  double witness_t = 0;
  bool nonconvex = false;  // min second difference < -1e-3
  bool linear = false;     // max |second difference| <= 1e-10
};

/// Second differences of y -> <log_z x, log_z y>_z along seeded geodesics
/// (same t grid as affinity_report). With through_z the geodesics pass
/// through z.
GramProbe gram_probe(const SpaceDescriptor& space, const Point& z, const Point& x,
                     int n_geodesics, std::uint64_t seed, bool through_z = false,
                     ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace hadamard
