#include "hadamard/horoball.hpp"

#include "hadamard/errors.hpp"
#include "hadamard/linalg.hpp"
#include "spd_frame.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace hadamard {

namespace {

constexpr double kNullWeight = 1e-14;
constexpr int kMaxRombergOrder = 4;

struct FactorRay {
  double weight;
  Ray ray;  // dir is unit when weight > 0
};

FactorRay factor_ray(const Ray& r, int which) {
  const Point b = factor_point(r.base, which);
  Tangent d = factor_tangent(r.dir, which);
  const double s = norm(d);
  if (s <= kNullWeight) return {0.0, Ray{b, zero_tangent(b)}};
  d.vec /= s;
  return {s, Ray{b, d}};
}

// Eigenbasis of the whitened direction, eigenvalues decreasing.
struct SpdFrame {
  Eigen::MatrixXd chol;
  Eigen::VectorXd lambda;
  Eigen::MatrixXd q;
};

SpdFrame spd_frame(const Ray& r) {
  const int n = r.base.space.order();
  SpdFrame f;
  f.chol = detail::cholesky_factor(as_matrix(r.base.coords, n));
  const linalg::SymEigen eig =
      linalg::jacobi_eigen(detail::whiten(f.chol, as_matrix(r.dir.vec, n)));
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return eig.values(a) > eig.values(b); });
  f.lambda.resize(n);
  f.q.resize(n, n);
  for (int i = 0; i < n; ++i) {
    f.lambda(i) = eig.values(idx[static_cast<std::size_t>(i)]);
    f.q.col(i) = eig.vectors.col(idx[static_cast<std::size_t>(i)]);
  }
  return f;
}

Eigen::MatrixXd spd_in_frame(const SpdFrame& f, const Point& x) {
  const int n = x.space.order();
  return linalg::symmetrize(f.q.transpose() * detail::whiten(f.chol, as_matrix(x.coords, n)) *
                            f.q);
}

double busemann_spd(const Ray& r, const Point& x) {
  const SpdFrame f = spd_frame(r);
  Eigen::MatrixXd a = spd_in_frame(f, x);
  const int n = static_cast<int>(a.rows());
  double out = 0;
  // Pivots of a = U D U^T, eliminated from the last index upwards.
  for (int i = n - 1; i >= 0; --i) {
    const double piv = a(i, i);
    if (!(piv > 0)) throw InvalidPoint("busemann: matrix lost positive definiteness");
    out -= f.lambda(i) * std::log(piv);
    for (int row = 0; row < i; ++row) {
      for (int col = 0; col < i; ++col) a(row, col) -= a(row, i) * a(i, col) / piv;
    }
  }
  return out;
}

double excess_euclidean(const Ray& r, const Point& x, double t) {
  const Eigen::VectorXd w = x.coords - r.base.coords;
  const double d = (w - t * r.dir.vec).norm();
  return (w.squaredNorm() - 2.0 * t * w.dot(r.dir.vec)) / (d + t);
}

double excess_spd(const Ray& r, const Point& x, double t) {
  const SpdFrame f = spd_frame(r);
  const Eigen::MatrixXd a = spd_in_frame(f, x);
  const int n = static_cast<int>(a.rows());
  // r(t) = L Q e^{t Lambda} Q^T L^T; congruence by (L Q e^{t Lambda / 2})^{-1}
  // gives a graded matrix whose eigenvalues Jacobi resolves to full relative
  // accuracy. Extended precision widens the exponent range; the shift c
  // keeps it centred.
  using Wide = long double;
  const Wide c = 0.5L * t * (f.lambda.maxCoeff() + f.lambda.minCoeff());
  Eigen::Matrix<Wide, Eigen::Dynamic, Eigen::Dynamic> g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      g(i, j) = static_cast<Wide>(a(i, j)) *
                std::exp(c - 0.5L * static_cast<Wide>(t) * (f.lambda(i) + f.lambda(j)));
    }
  }
  if (!g.allFinite()) throw ConvergenceFailure("busemann_numeric: SPD horizon overflow");
  linalg::jacobi_diagonalize<Wide>(g, nullptr);
  Wide d2 = 0;
  for (int i = 0; i < n; ++i) {
    if (!(g(i, i) > 0)) throw ConvergenceFailure("busemann_numeric: SPD horizon underflow");
    const Wide l = std::log(g(i, i)) - c;
    d2 += l * l;
  }
  return static_cast<double>(std::sqrt(d2) - static_cast<Wide>(t));
}

}  // namespace

Ray make_ray(const Point& p, const Tangent& u) {
  require_same_space(p.space, u.base.space, "make_ray");
  const double n = norm(Tangent{p, u.vec});
  if (!(n > 0)) throw std::invalid_argument("make_ray: zero direction");
  return Ray{p, Tangent{p, u.vec / n}};
}

Point ray_point(const Ray& r, double t) { return exp(r.base, t * r.dir); }

double busemann(const Ray& r, const Point& x) {
  require_same_space(r.base.space, x.space, "busemann");
  const SpaceDescriptor& s = x.space;
  switch (s.kind()) {
    case SpaceKind::Euclidean:
      return -r.dir.vec.dot(x.coords - r.base.coords);
    case SpaceKind::Hyperbolic: {
      // -k^2 <x, base + dir/k> = e^{-kd} + sinh(kd) |u - dir|^2 / 2 with
      // x = exp(base, d u). The polar form avoids the cancellation of the
      // ambient product far out along the ray.
      const double k = s.k();
      const double d = dist(r.base, x);
      if (d < 1e-6) {
        const Eigen::VectorXd w = x.coords - r.base.coords;
        const double arg = -k * k * minkowski(w, r.base.coords) - k * minkowski(w, r.dir.vec);
        return std::log1p(arg) / k;
      }
      const Eigen::VectorXd u = log(r.base, x).vec / d - r.dir.vec;
      const double gap = std::max(minkowski(u, u), 0.0);
      return std::log(std::exp(-k * d) + 0.5 * std::sinh(k * d) * gap) / k;
    }
    case SpaceKind::SPD:
      return busemann_spd(r, x);
    case SpaceKind::Product: {
      double out = 0;
      for (int i = 0; i < 2; ++i) {
        const FactorRay f = factor_ray(r, i);
        if (f.weight > 0) out += f.weight * busemann(f.ray, factor_point(x, i));
      }
      return out;
    }
  }
  return 0;
}

double ray_distance_excess(const Ray& r, const Point& x, double horizon) {
  require_same_space(r.base.space, x.space, "ray_distance_excess");
  switch (x.space.kind()) {
    case SpaceKind::Euclidean:
      return excess_euclidean(r, x, horizon);
    case SpaceKind::Hyperbolic: {
      // r(T) = (e^{kT} xi + e^{-kT} eta) / 2 with xi, eta = base +- dir/k, so
      // d - T = ln(W + sqrt(W^2 - e^{-2kT})) / k, W = e^{-kT} cosh(kd), which
      // stays finite for any horizon.
      const double k = x.space.k();
      const Eigen::VectorXd xi = r.base.coords + r.dir.vec / k;
      const Eigen::VectorXd eta = r.base.coords - r.dir.vec / k;
      const double e2 = std::exp(-2.0 * k * horizon);
      const double w = 0.5 * (-k * k * minkowski(x.coords, xi) - e2 * k * k * minkowski(x.coords, eta));
      const double out = std::log(w + std::sqrt(std::max(w * w - e2, 0.0))) / k;
      if (!std::isfinite(out)) throw ConvergenceFailure("busemann_numeric: horizon overflow");
      return out;
    }
    case SpaceKind::SPD:
      return excess_spd(r, x, horizon);
    case SpaceKind::Product: {
      // d^2 - T^2 = sum_i (2 s_i T e_i + e_i^2) with e_i the factor excess.
      double num = 0;
      double d2 = 0;
      for (int i = 0; i < 2; ++i) {
        const FactorRay f = factor_ray(r, i);
        const Point xi = factor_point(x, i);
        const double ti = f.weight * horizon;
        const double e = f.weight > 0 ? ray_distance_excess(f.ray, xi, ti) : dist(xi, f.ray.base);
        num += 2.0 * ti * e + e * e;
        d2 += (ti + e) * (ti + e);
      }
      return num / (std::sqrt(d2) + horizon);
    }
  }
  return 0;
}

NumericLimit busemann_numeric_limit(const Ray& r, const Point& x, const SearchBudget& budget) {
  budget.validate();
  double t = std::max(budget.t_max, 4.0 * dist(x, r.base));
  std::vector<double> prev_row;
  double prev_raw = 0;
  double prev_est = 0;
  int hits = 0;
  for (int j = 0; j <= budget.max_doublings; ++j, t *= 2.0) {
    const double raw = ray_distance_excess(r, x, t);
    if (!std::isfinite(raw)) throw ConvergenceFailure("busemann_numeric: non-finite distance");
    if (j > 0 && raw > prev_raw + 1e-9 * (1.0 + t)) {
      throw std::logic_error("busemann_numeric: d(x, r(T)) - T increased with T");
    }
    // Richardson in 1/T; the first-order term dominates on flat factors.
    const int order = std::min(j, kMaxRombergOrder);
    std::vector<double> row(static_cast<std::size_t>(order) + 1);
    row[0] = raw;
    for (int m = 1; m <= order; ++m) {
      const double f = std::ldexp(1.0, m) - 1.0;
      row[m] = row[m - 1] + (row[m - 1] - prev_row[m - 1]) / f;
    }
    const double est = row.back();
    // Below full order a vanishing series coefficient can stall one level,
    // so a hit there must repeat.
    hits = (j > 0 && std::abs(est - prev_est) < 0.25 * budget.tol) ? hits + 1 : 0;
    if (hits == 2 || (hits == 1 && order == kMaxRombergOrder)) return {est, t, j};
    prev_row = std::move(row);
    prev_raw = raw;
    prev_est = est;
  }
  throw ConvergenceFailure("busemann_numeric: no convergence within " +
                           std::to_string(budget.max_doublings) + " doublings");
}

Ray asymptote(const Point& q, const Ray& r) {
  require_same_space(q.space, r.base.space, "asymptote");
  const SpaceDescriptor& s = q.space;
  switch (s.kind()) {
    case SpaceKind::Euclidean:
      return Ray{q, Tangent{q, r.dir.vec}};
    case SpaceKind::Hyperbolic: {
      const double k = s.k();
      const Eigen::VectorXd xi = r.base.coords + r.dir.vec / k;
      const double c = -k * k * minkowski(q.coords, xi);
      Eigen::VectorXd w = k * (xi / c - q.coords);
      w += k * k * minkowski(q.coords, w) * q.coords;
      w /= std::sqrt(minkowski(w, w));
      return Ray{q, Tangent{q, w}};
    }
    case SpaceKind::Product: {
      Tangent parts[2];
      for (int i = 0; i < 2; ++i) {
        const FactorRay f = factor_ray(r, i);
        const Point qi = factor_point(q, i);
        parts[i] = f.weight > 0 ? f.weight * asymptote(qi, f.ray).dir : zero_tangent(qi);
      }
      return Ray{q, join_tangents(q, parts[0], parts[1])};
    }
    case SpaceKind::SPD: {
      const Tangent g = fd_gradient([&](const Point& y) { return busemann(r, y); }, q, 1e-5);
      const double n = norm(g);
      if (!(n >= 1e-8)) throw ConvergenceFailure("asymptote: degenerate Busemann gradient");
      return Ray{q, Tangent{q, -g.vec / n}};
    }
  }
  return r;
}

double h_kernel(const Point& p, const Point& z, const Point& y) {
  require_same_space(p.space, z.space, "h_kernel");
  require_same_space(p.space, y.space, "h_kernel");
  const double d = dist(z, p);
  if (d < 1e-12) return 0.0;
  return d * busemann(make_ray(p, -log(p, z)), y);
}

}  // namespace hadamard
