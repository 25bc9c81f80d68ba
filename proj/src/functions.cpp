#include "hadamard/functions.hpp"

#include "hadamard/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hadamard {

HSpec HSpec::quadratic(double a) {
  if (!(a > 0)) throw std::invalid_argument("quadratic: a must be positive");
  return {HKind::Quadratic, a};
}

HSpec HSpec::power(double q) {
  if (!(q >= 1)) throw std::invalid_argument("power: q must be at least 1");
  return {HKind::Power, q};
}

HSpec HSpec::linear(double c) {
  if (!(c > 0)) throw std::invalid_argument("linear: c must be positive");
  return {HKind::Linear, c};
}

HSpec HSpec::expm1() { return {HKind::Expm1, 1.0}; }

double HSpec::value(double t) const {
  if (t < 0) throw std::domain_error("h: negative argument");
  switch (kind) {
    case HKind::Quadratic: return 0.5 * param * t * t;
    case HKind::Power: return std::pow(t, param) / param;
    case HKind::Linear: return param * t;
    case HKind::Expm1: return std::expm1(t);
  }
  return 0;
}

double HSpec::derivative(double t) const {
  if (t < 0) throw std::domain_error("h': negative argument");
  switch (kind) {
    case HKind::Quadratic: return param * t;
    case HKind::Power: return std::pow(t, param - 1.0);
    case HKind::Linear: return param;
    case HKind::Expm1: return std::exp(t);
  }
  return 0;
}

std::string HSpec::name() const {
  std::ostringstream os;
  switch (kind) {
    case HKind::Quadratic: os << "quadratic(" << param << ")"; break;
    case HKind::Power: os << "power(" << param << ")"; break;
    case HKind::Linear: os << "linear(" << param << ")"; break;
    case HKind::Expm1: os << "expm1"; break;
  }
  return os.str();
}

FunctionSpec FunctionSpec::radial(const HSpec& h, const Point& center) {
  FunctionSpec f;
  f.kind = FunctionKind::Radial;
  f.space = center.space;
  f.h = h;
  f.center = center;
  return f;
}

FunctionSpec FunctionSpec::busemann(const Ray& r) {
  FunctionSpec f;
  f.kind = FunctionKind::Busemann;
  f.space = r.base.space;
  f.ray = r;
  return f;
}

FunctionSpec FunctionSpec::half_dist_sq(const Point& center) {
  FunctionSpec f;
  f.kind = FunctionKind::HalfDistSq;
  f.space = center.space;
  f.h = HSpec::quadratic(1.0);
  f.center = center;
  return f;
}

FunctionSpec FunctionSpec::logdet(const SpaceDescriptor& space) {
  if (space.kind() != SpaceKind::SPD) throw SpaceMismatch("logdet needs an SPD space");
  FunctionSpec f;
  f.kind = FunctionKind::LogDet;
  f.space = space;
  return f;
}

FunctionSpec FunctionSpec::gram(const Point& z, const Point& x) {
  require_same_space(z.space, x.space, "gram");
  FunctionSpec f;
  f.kind = FunctionKind::Gram;
  f.space = z.space;
  f.gram_z = z;
  f.gram_x = x;
  return f;
}

std::optional<HSpec> FunctionSpec::radial_profile() const {
  if (precompose) return std::nullopt;
  if (kind == FunctionKind::Radial || kind == FunctionKind::HalfDistSq) return h;
  return std::nullopt;
}

std::string FunctionSpec::name() const {
  std::string base;
  switch (kind) {
    case FunctionKind::Radial: base = "radial:" + h.name(); break;
    case FunctionKind::Busemann: base = "busemann"; break;
    case FunctionKind::HalfDistSq: base = "halfdistsq"; break;
    case FunctionKind::LogDet: base = "logdet"; break;
    case FunctionKind::Gram: base = "gram"; break;
  }
  return precompose ? base + " o I" : base;
}

double eval(const FunctionSpec& f, const Point& x) {
  require_same_space(f.space, x.space, "eval");
  if (f.precompose) {
    FunctionSpec plain = f;
    plain.precompose.reset();
    return eval(plain, apply(*f.precompose, x));
  }
  switch (f.kind) {
    case FunctionKind::Radial:
    case FunctionKind::HalfDistSq:
      return f.h.value(dist(x, *f.center));
    case FunctionKind::Busemann:
      return hadamard::busemann(*f.ray, x);
    case FunctionKind::LogDet: {
      const Eigen::LLT<Eigen::MatrixXd> llt(as_matrix(x.coords, x.space.order()));
      if (llt.info() != Eigen::Success) throw InvalidPoint("logdet: not positive definite");
      const Eigen::MatrixXd l = llt.matrixL();
      return 2.0 * l.diagonal().array().log().sum();
    }
    case FunctionKind::Gram: {
      const Point& z = *f.gram_z;
      return inner(z, log(z, *f.gram_x), log(z, x));
    }
  }
  return 0;
}

FunctionSpec compose(const FunctionSpec& f, const IsometryRep& iso) {
  require_same_space(f.space, iso.space, "compose");
  FunctionSpec out = f;
  out.precompose = std::make_shared<const IsometryRep>(
      f.precompose ? hadamard::compose(*f.precompose, iso) : iso);
  return out;
}

}  // namespace hadamard
