#pragma once

#include "hadamard/geometry.hpp"
#include "hadamard/sampling.hpp"

#include <vector>

namespace th {

using namespace hadamard;

inline SpaceDescriptor h2(double k = 1.0) { return SpaceDescriptor::hyperbolic(2, k); }
inline SpaceDescriptor h2xr() {
  return SpaceDescriptor::product(SpaceDescriptor::hyperbolic(2), SpaceDescriptor::euclidean(1));
}

inline std::vector<SpaceDescriptor> all_spaces() {
  return {SpaceDescriptor::euclidean(2), SpaceDescriptor::euclidean(3), SpaceDescriptor::hyperbolic(2),
          SpaceDescriptor::hyperbolic(3, 0.7), SpaceDescriptor::spd(2), SpaceDescriptor::spd(3), h2xr()};
}

inline Point pt(const SpaceDescriptor& s, std::initializer_list<double> c) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (double x : c) v(i++) = x;
  return make_point(s, v);
}

inline Tangent tv(const Point& p, std::initializer_list<double> c) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (double x : c) v(i++) = x;
  return make_tangent(p, v);
}

inline Point spd(const SpaceDescriptor& s, const Eigen::MatrixXd& m) { return make_spd_point(s, m); }

inline Tangent spd_tangent(const Point& p, const Eigen::MatrixXd& m) {
  return make_tangent(p, from_matrix(m));
}

inline Eigen::MatrixXd diag(std::initializer_list<double> c) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (double x : c) v(i++) = x;
  return v.asDiagonal();
}

// Unit-speed point at distance d from the origin of H^2 along e_1.
inline Point h2_at(double d, double k = 1.0) {
  const Point o = origin(h2(k));
  return exp(o, d * tangent_basis(o)[0]);
}

}  // namespace th
