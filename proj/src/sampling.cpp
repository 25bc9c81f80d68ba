#include "hadamard/sampling.hpp"

namespace hadamard {

Eigen::VectorXd gaussian_vector(Rng& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = normal(rng);
  return v;
}

Eigen::VectorXd unit_vector(Rng& rng, int n) {
  for (;;) {
    Eigen::VectorXd v = gaussian_vector(rng, n);
    const double nv = v.norm();
    if (nv > 1e-12) return v / nv;
  }
}

Tangent random_unit_tangent(const Point& p, Rng& rng) {
  const auto basis = tangent_basis(p);
  return from_coefficients(p, basis, unit_vector(rng, p.space.dim()));
}

Point random_point_near(const Point& center, double radius, Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, radius);
  const double s = uniform(rng);
  return exp(center, s * random_unit_tangent(center, rng));
}

}  // namespace hadamard
