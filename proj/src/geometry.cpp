#include "hadamard/geometry.hpp"

#include "hadamard/errors.hpp"
#include "hadamard/linalg.hpp"
#include "spd_frame.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hadamard {

namespace {

constexpr double kPointTol = 1e-10;
constexpr double kSymTol = 1e-12;

int spd_dim(int order) { return order * (order + 1) / 2; }

using detail::cholesky_factor;
using detail::unwhiten;
using detail::whiten;

double curvature_numerator(const Point& p, const Tangent& u, const Tangent& v);

}  // namespace

// --- SpaceDescriptor -------------------------------------------------------

SpaceDescriptor SpaceDescriptor::euclidean(int n) {
  if (n < 1) throw std::invalid_argument("euclidean: dimension must be positive");
  SpaceDescriptor s;
  s.kind_ = SpaceKind::Euclidean;
  s.dim_ = n;
  s.ambient_ = n;
  return s;
}

SpaceDescriptor SpaceDescriptor::hyperbolic(int n, double k) {
  if (n < 1) throw std::invalid_argument("hyperbolic: dimension must be positive");
  if (!(k > 0)) throw std::invalid_argument("hyperbolic: curvature scale k must be positive");
  SpaceDescriptor s;
  s.kind_ = SpaceKind::Hyperbolic;
  s.dim_ = n;
  s.k_ = k;
  s.ambient_ = n + 1;
  s.bounds_ = CurvatureBounds{k, k};
  return s;
}

SpaceDescriptor SpaceDescriptor::spd(int order) {
  if (order < 1) throw std::invalid_argument("spd: matrix order must be positive");
  SpaceDescriptor s;
  s.kind_ = SpaceKind::SPD;
  s.order_ = order;
  s.dim_ = spd_dim(order);
  s.ambient_ = order * order;
  return s;
}

SpaceDescriptor SpaceDescriptor::product(const SpaceDescriptor& first,
                                         const SpaceDescriptor& second) {
  SpaceDescriptor s;
  s.kind_ = SpaceKind::Product;
  s.dim_ = first.dim_ + second.dim_;
  s.ambient_ = first.ambient_ + second.ambient_;
  s.factors_ = std::make_shared<const std::pair<SpaceDescriptor, SpaceDescriptor>>(first, second);
  return s;
}

const SpaceDescriptor& SpaceDescriptor::first() const {
  if (!factors_) throw std::logic_error("first(): not a product space");
  return factors_->first;
}

const SpaceDescriptor& SpaceDescriptor::second() const {
  if (!factors_) throw std::logic_error("second(): not a product space");
  return factors_->second;
}

SpaceDescriptor SpaceDescriptor::with_bounds(CurvatureBounds bounds) const {
  if (!(bounds.a > 0) || !(bounds.b > 0) || bounds.a > bounds.b) {
    throw std::invalid_argument("curvature bounds need 0 < a <= b");
  }
  SpaceDescriptor s = *this;
  s.bounds_ = bounds;
  return s;
}

std::string SpaceDescriptor::name() const {
  std::ostringstream os;
  switch (kind_) {
    case SpaceKind::Euclidean: os << "E" << dim_; break;
    case SpaceKind::Hyperbolic: os << "H" << dim_ << "(k=" << k_ << ")"; break;
    case SpaceKind::SPD: os << "SPD(" << order_ << ")"; break;
    case SpaceKind::Product: os << first().name() << "x" << second().name(); break;
  }
  return os.str();
}

bool operator==(const SpaceDescriptor& a, const SpaceDescriptor& b) {
  if (a.kind_ != b.kind_ || a.dim_ != b.dim_ || a.ambient_ != b.ambient_) return false;
  switch (a.kind_) {
    case SpaceKind::Euclidean: return true;
    case SpaceKind::Hyperbolic: return a.k_ == b.k_;
    case SpaceKind::SPD: return a.order_ == b.order_;
    case SpaceKind::Product:
      return a.factors_ == b.factors_ ||
             (a.first() == b.first() && a.second() == b.second());
  }
  return false;
}

void require_same_space(const SpaceDescriptor& a, const SpaceDescriptor& b, const char* where) {
  if (!(a == b)) throw SpaceMismatch(std::string(where) + ": " + a.name() + " vs " + b.name());
}

// --- construction and validation ------------------------------------------

double minkowski(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const Eigen::Index n = x.size() - 1;
  return x.head(n).dot(y.head(n)) - x(n) * y(n);
}

Eigen::VectorXd renormalize_hyperbolic(const Eigen::VectorXd& x, double k) {
  const Eigen::Index n = x.size() - 1;
  if (!x.allFinite() || !(x(n) > 0)) throw InvalidPoint("hyperboloid coordinates off the upper sheet");
  // Recompute the time coordinate; <x,x>_L itself cancels badly far out.
  Eigen::VectorXd out = x;
  out(n) = std::sqrt(x.head(n).squaredNorm() + 1.0 / (k * k));
  return out;
}

Eigen::MatrixXd as_matrix(const Eigen::VectorXd& coords, int order) {
  return Eigen::Map<const Eigen::MatrixXd>(coords.data(), order, order);
}

Eigen::VectorXd from_matrix(const Eigen::MatrixXd& m) {
  return Eigen::Map<const Eigen::VectorXd>(m.data(), m.size());
}

void validate_point(const Point& x) {
  const SpaceDescriptor& s = x.space;
  if (x.coords.size() != s.ambient_size()) {
    throw InvalidPoint("expected " + std::to_string(s.ambient_size()) + " coordinates, got " +
                       std::to_string(x.coords.size()));
  }
  if (!x.coords.allFinite()) throw InvalidPoint("non-finite coordinate");
  switch (s.kind()) {
    case SpaceKind::Euclidean: return;
    case SpaceKind::Hyperbolic: {
      const double k2 = s.k() * s.k();
      const double defect = std::abs(k2 * minkowski(x.coords, x.coords) + 1.0);
      if (defect > kPointTol * (1.0 + k2 * x.coords.squaredNorm())) {
        throw InvalidPoint("not on the hyperboloid <x,x>_L = -1/k^2");
      }
      if (!(x.coords(x.coords.size() - 1) > 0)) throw InvalidPoint("not on the upper sheet");
      return;
    }
    case SpaceKind::SPD: {
      const Eigen::MatrixXd m = as_matrix(x.coords, s.order());
      if (linalg::asymmetry(m) > kSymTol * (1.0 + m.cwiseAbs().maxCoeff())) {
        throw InvalidPoint("SPD matrix not symmetric");
      }
      if (!(linalg::jacobi_eigen(m).values.minCoeff() > 0)) {
        throw InvalidPoint("SPD matrix not positive definite");
      }
      return;
    }
    case SpaceKind::Product:
      validate_point(factor_point(x, 0));
      validate_point(factor_point(x, 1));
      return;
  }
}

void validate_tangent(const Tangent& v) {
  const SpaceDescriptor& s = v.base.space;
  if (v.vec.size() != s.ambient_size()) throw NotTangent("wrong coordinate count");
  if (!v.vec.allFinite()) throw NotTangent("non-finite coordinate");
  switch (s.kind()) {
    case SpaceKind::Euclidean: return;
    case SpaceKind::Hyperbolic: {
      const double scale = 1.0 + s.k() * v.base.coords.norm() * v.vec.norm();
      if (std::abs(minkowski(v.base.coords, v.vec)) > kPointTol * scale) {
        throw NotTangent("not Minkowski-orthogonal to its base point");
      }
      return;
    }
    case SpaceKind::SPD: {
      const Eigen::MatrixXd m = as_matrix(v.vec, s.order());
      if (linalg::asymmetry(m) > kSymTol * (1.0 + m.cwiseAbs().maxCoeff())) {
        throw NotTangent("SPD tangent not symmetric");
      }
      return;
    }
    case SpaceKind::Product:
      validate_tangent(factor_tangent(v, 0));
      validate_tangent(factor_tangent(v, 1));
      return;
  }
}

Point make_point(const SpaceDescriptor& space, Eigen::VectorXd coords) {
  Point p{space, std::move(coords)};
  validate_point(p);
  return p;
}

Point make_spd_point(const SpaceDescriptor& space, const Eigen::MatrixXd& x) {
  if (space.kind() != SpaceKind::SPD) throw SpaceMismatch("make_spd_point on " + space.name());
  return make_point(space, from_matrix(x));
}

Tangent make_tangent(const Point& base, Eigen::VectorXd vec) {
  Tangent t{base, std::move(vec)};
  validate_tangent(t);
  return t;
}

Tangent zero_tangent(const Point& base) {
  return Tangent{base, Eigen::VectorXd::Zero(base.space.ambient_size())};
}

Point origin(const SpaceDescriptor& space) {
  switch (space.kind()) {
    case SpaceKind::Euclidean: return Point{space, Eigen::VectorXd::Zero(space.dim())};
    case SpaceKind::Hyperbolic: {
      Eigen::VectorXd c = Eigen::VectorXd::Zero(space.ambient_size());
      c(space.dim()) = 1.0 / space.k();
      return Point{space, c};
    }
    case SpaceKind::SPD:
      return Point{space, from_matrix(Eigen::MatrixXd::Identity(space.order(), space.order()))};
    case SpaceKind::Product:
      return join_points(space, origin(space.first()), origin(space.second()));
  }
  throw std::logic_error("origin: unknown space");
}

// --- products --------------------------------------------------------------

Point factor_point(const Point& x, int which) {
  const SpaceDescriptor& s = x.space;
  const SpaceDescriptor& f = which == 0 ? s.first() : s.second();
  const int offset = which == 0 ? 0 : s.first().ambient_size();
  return Point{f, x.coords.segment(offset, f.ambient_size())};
}

Tangent factor_tangent(const Tangent& v, int which) {
  const SpaceDescriptor& s = v.base.space;
  const SpaceDescriptor& f = which == 0 ? s.first() : s.second();
  const int offset = which == 0 ? 0 : s.first().ambient_size();
  return Tangent{factor_point(v.base, which), v.vec.segment(offset, f.ambient_size())};
}

Point join_points(const SpaceDescriptor& space, const Point& a, const Point& b) {
  Eigen::VectorXd c(space.ambient_size());
  c << a.coords, b.coords;
  return Point{space, c};
}

Tangent join_tangents(const Point& base, const Tangent& a, const Tangent& b) {
  Eigen::VectorXd c(base.space.ambient_size());
  c << a.vec, b.vec;
  return Tangent{base, c};
}

// --- metric operations -----------------------------------------------------

double dist(const Point& x, const Point& y) {
  require_same_space(x.space, y.space, "dist");
  const SpaceDescriptor& s = x.space;
  switch (s.kind()) {
    case SpaceKind::Euclidean: return (x.coords - y.coords).norm();
    case SpaceKind::Hyperbolic: {
      // (4/k^2) sinh^2(kd/2) = <x-y, x-y>_L. With S = h_x + h_y, T = t_x + t_y
      // and h_x - h_y = a S/|S| + b, eliminating the time difference through
      // t^2 = |h|^2 + c, c = 1/k^2, gives
      //   <x-y, x-y>_L = |b|^2 + a^2 (T^2 - |S|^2) / T^2,  T^2 - |S|^2 = 2 (c + P),
      // where P = -<x, y>_L is expanded as a sum of nonnegative terms. No step
      // cancels, near or far from the origin.
      const double k = s.k();
      const double c = 1.0 / (k * k);
      const int n = s.dim();
      const auto hx = x.coords.head(n);
      const auto hy = y.coords.head(n);
      // Times are recomputed from the spatial parts so the identity holds exactly.
      const double nx = hx.norm();
      const double ny = hy.norm();
      const double tx = std::hypot(nx, 1.0 / k);
      const double ty = std::hypot(ny, 1.0 / k);
      const double m = std::max(tx, ty);
      double p = c * ((nx / m) * (nx / m) + (ny / m) * (ny / m) + c / (m * m)) /
                 ((tx / m) * (ty / m) + (nx / m) * (ny / m));
      if (nx > 0 && ny > 0) p += 0.5 * nx * ny * (hx / nx - hy / ny).squaredNorm();
      const Eigen::VectorXd sum = hx + hy;
      const double sn = sum.norm();
      double a = 0;
      double b2 = 0;
      if (sn > 0) {
        const Eigen::VectorXd e = sum / sn;
        a = (hx - hy).dot(e);
        // The parts of h_x and h_y orthogonal to S cancel, so b is twice the
        // orthogonal part of the shorter one.
        const auto small = nx <= ny ? hx : hy;
        b2 = 4.0 * (small - small.dot(e) * e).squaredNorm();
      } else {
        b2 = (hx - hy).squaredNorm();
      }
      const double r = a / (tx + ty);
      const double q = b2 + r * r * 2.0 * (c + p);
      return 2.0 / k * std::asinh(0.5 * k * std::sqrt(q));
    }
    case SpaceKind::SPD: {
      // Fixed operand order keeps the result exactly symmetric.
      const bool swap = std::lexicographical_compare(y.coords.begin(), y.coords.end(), x.coords.begin(),
                                                     x.coords.end());
      const Point& a = swap ? y : x;
      const Point& b = swap ? x : y;
      const int n = s.order();
      const Eigen::MatrixXd l = cholesky_factor(as_matrix(a.coords, n));
      const Eigen::VectorXd ev = linalg::jacobi_eigen(whiten(l, as_matrix(b.coords, n))).values;
      double acc = 0;
      for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (!(ev(i) > 0)) throw InvalidPoint("SPD distance: matrix not positive definite");
        acc += std::log(ev(i)) * std::log(ev(i));
      }
      return std::sqrt(acc);
    }
    case SpaceKind::Product: {
      const double d1 = dist(factor_point(x, 0), factor_point(y, 0));
      const double d2 = dist(factor_point(x, 1), factor_point(y, 1));
      return std::hypot(d1, d2);
    }
  }
  throw std::logic_error("dist: unknown space");
}

Point exp(const Point& p, const Tangent& v) {
  require_same_space(p.space, v.base.space, "exp");
  const SpaceDescriptor& s = p.space;
  switch (s.kind()) {
    case SpaceKind::Euclidean: return Point{s, p.coords + v.vec};
    case SpaceKind::Hyperbolic: {
      const double k = s.k();
      const double scale = 1.0 + k * p.coords.norm() * v.vec.norm();
      if (std::abs(minkowski(p.coords, v.vec)) > kPointTol * scale) {
        throw NotTangent("exp: vector not Minkowski-orthogonal to base");
      }
      const double nv = std::sqrt(std::max(minkowski(v.vec, v.vec), 0.0));
      if (nv == 0.0) return p;
      const double a = k * nv;
      const Eigen::VectorXd out = std::cosh(a) * p.coords + (std::sinh(a) / a) * v.vec;
      return Point{s, renormalize_hyperbolic(out, k)};
    }
    case SpaceKind::SPD: {
      const int n = s.order();
      const Eigen::MatrixXd vm = as_matrix(v.vec, n);
      if (linalg::asymmetry(vm) > kSymTol * (1.0 + vm.cwiseAbs().maxCoeff())) {
        throw NotTangent("exp: SPD tangent not symmetric");
      }
      const Eigen::MatrixXd l = cholesky_factor(as_matrix(p.coords, n));
      return Point{s, from_matrix(unwhiten(l, linalg::expm_sym(whiten(l, vm))))};
    }
    case SpaceKind::Product: {
      const Point a = exp(factor_point(p, 0), factor_tangent(v, 0));
      const Point b = exp(factor_point(p, 1), factor_tangent(v, 1));
      return join_points(s, a, b);
    }
  }
  throw std::logic_error("exp: unknown space");
}

Tangent log(const Point& p, const Point& q) {
  require_same_space(p.space, q.space, "log");
  const SpaceDescriptor& s = p.space;
  switch (s.kind()) {
    case SpaceKind::Euclidean: return Tangent{p, q.coords - p.coords};
    case SpaceKind::Hyperbolic: {
      const double k = s.k();
      const Eigen::VectorXd w = q.coords - p.coords;
      // Tangential projection of q - p; equals q + k^2 <p,q>_L p.
      const Eigen::VectorXd u = w + k * k * minkowski(p.coords, w) * p.coords;
      const double nu = std::sqrt(std::max(minkowski(u, u), 0.0));
      const double d = dist(p, q);
      if (d == 0.0 || nu == 0.0) return zero_tangent(p);
      return Tangent{p, (d / nu) * u};
    }
    case SpaceKind::SPD: {
      const int n = s.order();
      const Eigen::MatrixXd l = cholesky_factor(as_matrix(p.coords, n));
      return Tangent{p, from_matrix(unwhiten(l, linalg::logm_spd(whiten(l, as_matrix(q.coords, n)))))};
    }
    case SpaceKind::Product: {
      const Tangent a = log(factor_point(p, 0), factor_point(q, 0));
      const Tangent b = log(factor_point(p, 1), factor_point(q, 1));
      return join_tangents(p, a, b);
    }
  }
  throw std::logic_error("log: unknown space");
}

double inner(const Point& p, const Tangent& u, const Tangent& v) {
  require_same_space(p.space, u.base.space, "inner");
  require_same_space(p.space, v.base.space, "inner");
  const SpaceDescriptor& s = p.space;
  switch (s.kind()) {
    case SpaceKind::Euclidean: return u.vec.dot(v.vec);
    case SpaceKind::Hyperbolic: return minkowski(u.vec, v.vec);
    case SpaceKind::SPD: {
      const int n = s.order();
      const Eigen::MatrixXd l = cholesky_factor(as_matrix(p.coords, n));
      const Eigen::MatrixXd a = whiten(l, as_matrix(u.vec, n));
      const Eigen::MatrixXd b = whiten(l, as_matrix(v.vec, n));
      return a.cwiseProduct(b).sum();
    }
    case SpaceKind::Product:
      return inner(factor_point(p, 0), factor_tangent(u, 0), factor_tangent(v, 0)) +
             inner(factor_point(p, 1), factor_tangent(u, 1), factor_tangent(v, 1));
  }
  throw std::logic_error("inner: unknown space");
}

double norm(const Tangent& v) { return std::sqrt(std::max(inner(v.base, v, v), 0.0)); }

std::vector<Tangent> tangent_basis(const Point& p) {
  const SpaceDescriptor& s = p.space;
  std::vector<Tangent> basis;
  basis.reserve(s.dim());
  switch (s.kind()) {
    case SpaceKind::Euclidean:
      for (int i = 0; i < s.dim(); ++i) {
        basis.push_back(Tangent{p, Eigen::VectorXd::Unit(s.dim(), i)});
      }
      return basis;
    case SpaceKind::Hyperbolic: {
      const double k2 = s.k() * s.k();
      for (int i = 0; i < s.dim(); ++i) {
        const Eigen::VectorXd e = Eigen::VectorXd::Unit(s.ambient_size(), i);
        Eigen::VectorXd w = e + k2 * minkowski(p.coords, e) * p.coords;
        for (const Tangent& b : basis) w -= minkowski(w, b.vec) * b.vec;
        w /= std::sqrt(minkowski(w, w));
        basis.push_back(Tangent{p, w});
      }
      return basis;
    }
    case SpaceKind::SPD: {
      const int n = s.order();
      const Eigen::MatrixXd l = cholesky_factor(as_matrix(p.coords, n));
      for (int i = 0; i < n; ++i) {
        Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
        e(i, i) = 1.0;
        basis.push_back(Tangent{p, from_matrix(unwhiten(l, e))});
      }
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
          e(i, j) = e(j, i) = 1.0 / std::sqrt(2.0);
          basis.push_back(Tangent{p, from_matrix(unwhiten(l, e))});
        }
      }
      return basis;
    }
    case SpaceKind::Product: {
      const Tangent zero_a = zero_tangent(factor_point(p, 0));
      const Tangent zero_b = zero_tangent(factor_point(p, 1));
      for (const Tangent& e : tangent_basis(factor_point(p, 0))) {
        basis.push_back(join_tangents(p, e, zero_b));
      }
      for (const Tangent& e : tangent_basis(factor_point(p, 1))) {
        basis.push_back(join_tangents(p, zero_a, e));
      }
      return basis;
    }
  }
  throw std::logic_error("tangent_basis: unknown space");
}

namespace {

// <R(u,v)v, u> with the sign convention that makes Hadamard spaces nonpositive.
double curvature_numerator(const Point& p, const Tangent& u, const Tangent& v) {
  const SpaceDescriptor& s = p.space;
  switch (s.kind()) {
    case SpaceKind::Euclidean: return 0.0;
    case SpaceKind::Hyperbolic: {
      const double uu = minkowski(u.vec, u.vec);
      const double vv = minkowski(v.vec, v.vec);
      const double uv = minkowski(u.vec, v.vec);
      return -s.k() * s.k() * (uu * vv - uv * uv);
    }
    case SpaceKind::SPD: {
      // At the identity R(U,V)W = -1/4 [[U,V],W]; transported by congruence.
      const int n = s.order();
      const Eigen::MatrixXd l = cholesky_factor(as_matrix(p.coords, n));
      const Eigen::MatrixXd a = whiten(l, as_matrix(u.vec, n));
      const Eigen::MatrixXd b = whiten(l, as_matrix(v.vec, n));
      const Eigen::MatrixXd bracket = a * b - b * a;
      return -0.25 * bracket.squaredNorm();
    }
    case SpaceKind::Product:
      return curvature_numerator(factor_point(p, 0), factor_tangent(u, 0), factor_tangent(v, 0)) +
             curvature_numerator(factor_point(p, 1), factor_tangent(u, 1), factor_tangent(v, 1));
  }
  throw std::logic_error("curvature_numerator: unknown space");
}

}  // namespace

double sectional(const Point& p, const Tangent& u, const Tangent& v) {
  require_same_space(p.space, u.base.space, "sectional");
  require_same_space(p.space, v.base.space, "sectional");
  const double uu = inner(p, u, u);
  const double vv = inner(p, v, v);
  const double uv = inner(p, u, v);
  const double area2 = uu * vv - uv * uv;
  if (!(area2 > 1e-14 * uu * vv) || uu == 0.0 || vv == 0.0) {
    throw std::invalid_argument("sectional: vectors span no plane");
  }
  return curvature_numerator(p, u, v) / area2;
}

std::vector<Tangent> orthonormal_completion(const Point& p, const Tangent& v) {
  std::vector<Tangent> out;
  const int needed = p.space.dim() - 1;
  for (const Tangent& e : tangent_basis(p)) {
    if (static_cast<int>(out.size()) == needed) break;
    Tangent w = e - inner(p, e, v) * v;
    for (const Tangent& q : out) w = w - inner(p, w, q) * q;
    const double nw = norm(w);
    if (nw < 1e-6) continue;
    out.push_back((1.0 / nw) * w);
  }
  return out;
}

double ricci_dir(const Point& p, const Tangent& v, const std::vector<Tangent>& completion) {
  const int dim = p.space.dim();
  if (dim < 2) throw std::invalid_argument("ricci_dir: dimension must be at least 2");
  if (std::abs(norm(v) - 1.0) > 1e-10) throw std::invalid_argument("ricci_dir: direction not unit");
  if (static_cast<int>(completion.size()) != dim - 1) {
    throw std::invalid_argument("ricci_dir: completion must have dim - 1 vectors");
  }
  double acc = 0;
  for (const Tangent& e : completion) acc += sectional(p, v, e);
  return acc / (dim - 1);
}

double ricci_dir(const Point& p, const Tangent& v) {
  if (p.space.dim() < 2) throw std::invalid_argument("ricci_dir: dimension must be at least 2");
  if (std::abs(norm(v) - 1.0) > 1e-10) throw std::invalid_argument("ricci_dir: direction not unit");
  return ricci_dir(p, v, orthonormal_completion(p, v));
}

// --- tangent arithmetic ----------------------------------------------------

Tangent operator+(const Tangent& a, const Tangent& b) { return Tangent{a.base, a.vec + b.vec}; }
Tangent operator-(const Tangent& a, const Tangent& b) { return Tangent{a.base, a.vec - b.vec}; }
Tangent operator*(double s, const Tangent& a) { return Tangent{a.base, s * a.vec}; }
Tangent operator-(const Tangent& a) { return Tangent{a.base, -a.vec}; }

Eigen::VectorXd to_coefficients(const std::vector<Tangent>& basis, const Tangent& v) {
  Eigen::VectorXd c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) c(static_cast<Eigen::Index>(i)) = inner(v.base, basis[i], v);
  return c;
}

Tangent from_coefficients(const Point& p, const std::vector<Tangent>& basis,
                          const Eigen::VectorXd& coeffs) {
  Eigen::VectorXd vec = Eigen::VectorXd::Zero(p.space.ambient_size());
  for (std::size_t i = 0; i < basis.size(); ++i) vec += coeffs(static_cast<Eigen::Index>(i)) * basis[i].vec;
  return Tangent{p, vec};
}

}  // namespace hadamard
