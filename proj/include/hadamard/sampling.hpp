#pragma once

#include "hadamard/geometry.hpp"

#include <cstdint>
#include <random>

namespace hadamard {

using Rng = std::mt19937_64;

/// Standard normal coefficient vector.
Eigen::VectorXd gaussian_vector(Rng& rng, int n);

/// Uniform unit vector in R^n.
Eigen::VectorXd unit_vector(Rng& rng, int n);

/// Uniformly distributed unit tangent at p (w.r.t. the Riemannian metric).
Tangent random_unit_tangent(const Point& p, Rng& rng);

/// exp_center(s * w) with s uniform in [0, radius] and w a uniform unit
/// direction. Denser near the centre than volume-uniform sampling, which is
/// what the audits want.
Point random_point_near(const Point& center, double radius, Rng& rng);

}  // namespace hadamard
