#pragma once

// Catalog of functions on Hadamard spaces.

#include "hadamard/geometry.hpp"
#include "hadamard/horoball.hpp"
#include "hadamard/isometry.hpp"

#include <memory>
#include <optional>
#include <string>

namespace hadamard {

enum class HKind { Quadratic, Power, Linear, Expm1 };

/// Convex profile h on [0, inf) with h(0) = 0.
struct HSpec {
  HKind kind = HKind::Quadratic;
  double param = 1.0;  // a, q or c; unused for expm1

  static HSpec quadratic(double a);
  static HSpec power(double q);
  static HSpec linear(double c);
  static HSpec expm1();

  double value(double t) const;
  double derivative(double t) const;
  std::string name() const;
};

enum class FunctionKind { Radial, Busemann, HalfDistSq, LogDet, Gram };

struct FunctionSpec {
  FunctionKind kind = FunctionKind::HalfDistSq;
  SpaceDescriptor space;
  HSpec h;                       // Radial
  std::optional<Point> center;   // Radial, HalfDistSq
  std::optional<Ray> ray;        // Busemann
  std::optional<Point> gram_z;   // Gram: g(y) = <log_z x, log_z y>_z
  std::optional<Point> gram_x;
  std::shared_ptr<const IsometryRep> precompose;  // evaluates f(I(x)) when set

  static FunctionSpec radial(const HSpec& h, const Point& center);
  static FunctionSpec busemann(const Ray& r);
  static FunctionSpec half_dist_sq(const Point& center);
  static FunctionSpec logdet(const SpaceDescriptor& space);
  static FunctionSpec gram(const Point& z, const Point& x);

  /// Radial profile, with half_dist_sq read as quadratic(1). Empty for
  /// non-radial kinds and for precomposed functions.
  std::optional<HSpec> radial_profile() const;
  std::string name() const;
};

double eval(const FunctionSpec& f, const Point& x);

/// f o iso.
FunctionSpec compose(const FunctionSpec& f, const IsometryRep& iso);

}  // namespace hadamard
