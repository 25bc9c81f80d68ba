#include "hadamard/isometry.hpp"

#include "hadamard/errors.hpp"
#include "hadamard/linalg.hpp"
#include "hadamard/sampling.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hadamard {

namespace {

constexpr double kExact = 1e-10;
constexpr double kDrift = 1e-8;
constexpr double kMaxCondition = 1e8;

Eigen::MatrixXd minkowski_metric(int size) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Identity(size, size);
  j(size - 1, size - 1) = -1.0;
  return j;
}

double lorentz_defect(const Eigen::MatrixXd& a) {
  const Eigen::MatrixXd j = minkowski_metric(static_cast<int>(a.rows()));
  return (a.transpose() * j * a - j).cwiseAbs().maxCoeff();
}

// Gram-Schmidt under J, time column first.
Eigen::MatrixXd reorthonormalize_lorentz(const Eigen::MatrixXd& a) {
  const int m = static_cast<int>(a.rows());
  Eigen::MatrixXd out = a;
  auto form = [](const Eigen::VectorXd& x, const Eigen::VectorXd& y) { return minkowski(x, y); };
  Eigen::VectorXd t = out.col(m - 1);
  t /= std::sqrt(-form(t, t));
  out.col(m - 1) = t;
  for (int c = 0; c < m - 1; ++c) {
    Eigen::VectorXd v = out.col(c);
    v += form(v, t) * t;
    for (int prev = 0; prev < c; ++prev) v -= form(v, out.col(prev)) * out.col(prev);
    out.col(c) = v / std::sqrt(form(v, v));
  }
  return out;
}

double condition_number(const Eigen::MatrixXd& a) {
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  return s(s.size() - 1) > 0 ? s(0) / s(s.size() - 1) : INFINITY;
}

// Haar-distributed orthogonal matrix (QR of a Gaussian with sign fix).
Eigen::MatrixXd random_orthogonal(Rng& rng, int n) {
  Eigen::MatrixXd g(n, n);
  for (int c = 0; c < n; ++c) g.col(c) = gaussian_vector(rng, n);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  }
  return q;
}

void require_kind(const SpaceDescriptor& s, SpaceKind kind, const char* what) {
  if (s.kind() != kind) throw SpaceMismatch(std::string(what) + " on " + s.name());
}

}  // namespace

IsometryRep IsometryRep::identity(const SpaceDescriptor& space) {
  IsometryRep r;
  r.space = space;
  r.kind = IsometryKind::Composite;
  return r;
}

IsometryRep IsometryRep::euclidean_rigid(const SpaceDescriptor& space, const Eigen::MatrixXd& q,
                                         const Eigen::VectorXd& b) {
  require_kind(space, SpaceKind::Euclidean, "euclidean_rigid");
  IsometryRep r;
  r.space = space;
  r.kind = IsometryKind::EuclideanRigid;
  r.matrix = q;
  r.offset = b;
  validate(r);
  return r;
}

IsometryRep IsometryRep::lorentz(const SpaceDescriptor& space, const Eigen::MatrixXd& a) {
  require_kind(space, SpaceKind::Hyperbolic, "lorentz");
  if (a.rows() != space.ambient_size() || a.cols() != space.ambient_size()) {
    throw std::invalid_argument("lorentz: matrix size does not match the hyperboloid");
  }
  IsometryRep r;
  r.space = space;
  r.kind = IsometryKind::Lorentz;
  const double defect = lorentz_defect(a);
  if (defect > kDrift) throw std::invalid_argument("lorentz: A^T J A = J violated");
  r.matrix = defect > kExact ? reorthonormalize_lorentz(a) : a;
  validate(r);
  return r;
}

IsometryRep IsometryRep::spd_congruence(const SpaceDescriptor& space, const Eigen::MatrixXd& a) {
  require_kind(space, SpaceKind::SPD, "spd_congruence");
  IsometryRep r;
  r.space = space;
  r.kind = IsometryKind::SPDCongruence;
  r.matrix = a;
  validate(r);
  return r;
}

IsometryRep IsometryRep::spd_inverse(const SpaceDescriptor& space) {
  require_kind(space, SpaceKind::SPD, "spd_inverse");
  IsometryRep r;
  r.space = space;
  r.kind = IsometryKind::SPDInverse;
  return r;
}

IsometryRep IsometryRep::product_pair(const SpaceDescriptor& space, const IsometryRep& first,
                                      const IsometryRep& second) {
  require_kind(space, SpaceKind::Product, "product_pair");
  require_same_space(space.first(), first.space, "product_pair");
  require_same_space(space.second(), second.space, "product_pair");
  IsometryRep r;
  r.space = space;
  r.kind = IsometryKind::ProductPair;
  r.parts = {first, second};
  return r;
}

double constraint_defect(const IsometryRep& iso) {
  switch (iso.kind) {
    case IsometryKind::EuclideanRigid: {
      const auto n = iso.matrix.rows();
      return (iso.matrix.transpose() * iso.matrix - Eigen::MatrixXd::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();
    }
    case IsometryKind::Lorentz:
      return lorentz_defect(iso.matrix);
    case IsometryKind::SPDCongruence:
    case IsometryKind::SPDInverse:
      return 0.0;
    case IsometryKind::ProductPair:
    case IsometryKind::Composite: {
      double out = 0;
      for (const auto& part : iso.parts) out = std::max(out, constraint_defect(part));
      return out;
    }
  }
  return 0.0;
}

void validate(const IsometryRep& iso) {
  switch (iso.kind) {
    case IsometryKind::EuclideanRigid:
      if (iso.matrix.rows() != iso.space.dim() || iso.matrix.cols() != iso.space.dim() ||
          iso.offset.size() != iso.space.dim()) {
        throw std::invalid_argument("euclidean_rigid: dimension mismatch");
      }
      if (constraint_defect(iso) > kExact) throw std::invalid_argument("Q is not orthogonal");
      return;
    case IsometryKind::Lorentz: {
      if (constraint_defect(iso) > kExact) throw std::invalid_argument("A^T J A = J violated");
      const auto m = iso.matrix.rows();
      if (!(iso.matrix(m - 1, m - 1) > 0)) {
        throw std::invalid_argument("Lorentz map swaps the hyperboloid sheets");
      }
      return;
    }
    case IsometryKind::SPDCongruence:
      if (iso.matrix.rows() != iso.space.order() || iso.matrix.cols() != iso.space.order()) {
        throw std::invalid_argument("spd_congruence: matrix order mismatch");
      }
      if (!(condition_number(iso.matrix) < kMaxCondition)) {
        throw std::invalid_argument("spd_congruence: matrix singular or ill-conditioned");
      }
      return;
    case IsometryKind::SPDInverse:
      return;
    case IsometryKind::ProductPair:
    case IsometryKind::Composite:
      for (const auto& part : iso.parts) validate(part);
      return;
  }
}

Point apply(const IsometryRep& iso, const Point& x) {
  require_same_space(iso.space, x.space, "apply");
  switch (iso.kind) {
    case IsometryKind::EuclideanRigid:
      return Point{x.space, iso.matrix * x.coords + iso.offset};
    case IsometryKind::Lorentz:
      return make_point(x.space, renormalize_hyperbolic(iso.matrix * x.coords, x.space.k()));
    case IsometryKind::SPDCongruence: {
      const Eigen::MatrixXd m = as_matrix(x.coords, x.space.order());
      return make_spd_point(x.space,
                            linalg::symmetrize(iso.matrix * m * iso.matrix.transpose()));
    }
    case IsometryKind::SPDInverse: {
      const Eigen::MatrixXd m = as_matrix(x.coords, x.space.order());
      return make_spd_point(x.space, linalg::symmetrize(m.llt().solve(
                                         Eigen::MatrixXd::Identity(m.rows(), m.cols()))));
    }
    case IsometryKind::ProductPair:
      return join_points(x.space, apply(iso.parts[0], factor_point(x, 0)),
                         apply(iso.parts[1], factor_point(x, 1)));
    case IsometryKind::Composite: {
      Point y = x;
      for (auto it = iso.parts.rbegin(); it != iso.parts.rend(); ++it) y = apply(*it, y);
      return y;
    }
  }
  return x;
}

Tangent differential(const IsometryRep& iso, const Point& b, const Tangent& u) {
  require_same_space(iso.space, b.space, "differential");
  require_same_space(b.space, u.base.space, "differential");
  if ((b.coords - u.base.coords).cwiseAbs().maxCoeff() >
      1e-12 * (1.0 + b.coords.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("differential: tangent is not based at b");
  }
  switch (iso.kind) {
    case IsometryKind::EuclideanRigid:
    case IsometryKind::Lorentz:
      return Tangent{apply(iso, b), iso.matrix * u.vec};
    case IsometryKind::SPDCongruence: {
      const Eigen::MatrixXd m = as_matrix(u.vec, b.space.order());
      return Tangent{apply(iso, b),
                     from_matrix(linalg::symmetrize(iso.matrix * m * iso.matrix.transpose()))};
    }
    case IsometryKind::SPDInverse: {
      const int n = b.space.order();
      const Eigen::MatrixXd xm = as_matrix(b.coords, n);
      const Eigen::LLT<Eigen::MatrixXd> llt(xm);
      const Eigen::MatrixXd xinv = llt.solve(Eigen::MatrixXd::Identity(n, n));
      const Eigen::MatrixXd m = as_matrix(u.vec, n);
      return Tangent{apply(iso, b), from_matrix(linalg::symmetrize(-xinv * m * xinv))};
    }
    case IsometryKind::ProductPair: {
      const Point b0 = factor_point(b, 0);
      const Point b1 = factor_point(b, 1);
      const Tangent d0 = differential(iso.parts[0], b0, factor_tangent(u, 0));
      const Tangent d1 = differential(iso.parts[1], b1, factor_tangent(u, 1));
      return join_tangents(apply(iso, b), d0, d1);
    }
    case IsometryKind::Composite: {
      Point y = b;
      Tangent w = u;
      for (auto it = iso.parts.rbegin(); it != iso.parts.rend(); ++it) {
        w = differential(*it, y, w);
        y = w.base;
      }
      return w;
    }
  }
  return u;
}

IsometryRep inverse(const IsometryRep& iso) {
  switch (iso.kind) {
    case IsometryKind::EuclideanRigid: {
      const Eigen::MatrixXd qt = iso.matrix.transpose();
      return IsometryRep::euclidean_rigid(iso.space, qt, -qt * iso.offset);
    }
    case IsometryKind::Lorentz: {
      const Eigen::MatrixXd j = minkowski_metric(static_cast<int>(iso.matrix.rows()));
      return IsometryRep::lorentz(iso.space, j * iso.matrix.transpose() * j);
    }
    case IsometryKind::SPDCongruence:
      return IsometryRep::spd_congruence(iso.space, iso.matrix.inverse());
    case IsometryKind::SPDInverse:
      return iso;
    case IsometryKind::ProductPair:
      return IsometryRep::product_pair(iso.space, inverse(iso.parts[0]), inverse(iso.parts[1]));
    case IsometryKind::Composite: {
      IsometryRep r = IsometryRep::identity(iso.space);
      for (auto it = iso.parts.rbegin(); it != iso.parts.rend(); ++it) {
        r.parts.push_back(inverse(*it));
      }
      return r;
    }
  }
  return iso;
}

IsometryRep compose(const IsometryRep& first, const IsometryRep& second) {
  require_same_space(first.space, second.space, "compose");
  IsometryRep r = IsometryRep::identity(first.space);
  for (const IsometryRep* part : {&first, &second}) {
    if (part->kind == IsometryKind::Composite) {
      r.parts.insert(r.parts.end(), part->parts.begin(), part->parts.end());
    } else {
      r.parts.push_back(*part);
    }
  }
  return r;
}

Eigen::MatrixXd lorentz_boost(int n, int axis, double rapidity) {
  if (axis < 0 || axis >= n) throw std::invalid_argument("lorentz_boost: axis out of range");
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n + 1, n + 1);
  a(axis, axis) = std::cosh(rapidity);
  a(n, n) = std::cosh(rapidity);
  a(axis, n) = std::sinh(rapidity);
  a(n, axis) = std::sinh(rapidity);
  return a;
}

Eigen::MatrixXd lorentz_rotation(const Eigen::MatrixXd& r) {
  const auto n = r.rows();
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n + 1, n + 1);
  a.topLeftCorner(n, n) = r;
  return a;
}

IsometryRep random_isometry(const SpaceDescriptor& space, std::uint64_t seed) {
  Rng rng(seed);
  switch (space.kind()) {
    case SpaceKind::Euclidean: {
      const int n = space.dim();
      return IsometryRep::euclidean_rigid(space, random_orthogonal(rng, n),
                                          gaussian_vector(rng, n));
    }
    case SpaceKind::Hyperbolic: {
      const int n = space.dim();
      std::uniform_real_distribution<double> rapidity(0.0, 2.0);
      const IsometryRep rot = IsometryRep::lorentz(space, lorentz_rotation(random_orthogonal(rng, n)));
      const IsometryRep boost = IsometryRep::lorentz(space, lorentz_boost(n, 0, rapidity(rng)));
      return compose(rot, boost);
    }
    case SpaceKind::SPD: {
      const int n = space.order();
      std::uniform_real_distribution<double> sv(1.0, 10.0);
      Eigen::VectorXd s(n);
      for (int i = 0; i < n; ++i) s(i) = sv(rng);
      s /= s.minCoeff();
      if (s.maxCoeff() > 10.0) s *= 10.0 / s.maxCoeff();
      const Eigen::MatrixXd u = random_orthogonal(rng, n);
      const Eigen::MatrixXd v = random_orthogonal(rng, n);
      return IsometryRep::spd_congruence(space, u * s.asDiagonal() * v.transpose());
    }
    case SpaceKind::Product: {
      const std::uint64_t s0 = rng();
      const std::uint64_t s1 = rng();
      return IsometryRep::product_pair(space, random_isometry(space.first(), s0),
                                       random_isometry(space.second(), s1));
    }
  }
  return IsometryRep::identity(space);
}

}  // namespace hadamard
