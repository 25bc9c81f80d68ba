#include "hadamard/subgradient.hpp"

#include "hadamard/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace hadamard {

SubgradientWitness witness_point(const Point& p, const Point& x, const Tangent& v) {
  require_same_space(p.space, x.space, "witness_point");
  require_same_space(x.space, v.base.space, "witness_point");
  const double nv = norm(Tangent{x, v.vec});
  if (nv == 0) return {x, v, std::nullopt, p};
  const Tangent eta = asymptote(p, make_ray(x, -v)).dir;
  return {x, v, eta, exp(p, -nv * eta)};
}

SubgradientReport is_subgradient(const FunctionSpec& f, const Point& p, const Point& x,
                                 const Tangent& v, const SearchBudget& budget,
                                 ExecutionPolicy policy) {
  budget.validate();
  SubgradientReport report;
  report.witness = witness_point(p, x, v);
  const Point& y = report.witness.y;
  const double fx = eval(f, x);
  const double hxy = h_kernel(p, x, y);
  auto slack = [&](const Point& z) { return eval(f, z) - fx - h_kernel(p, z, y) + hxy; };

  Rng rng(budget.seed);
  std::vector<Point> zs{x};
  for (int i = 1; i < budget.n_samples; ++i) {
    zs.push_back(random_point_near(p, budget.sample_radius, rng));
  }
  const std::vector<double> values = kernels::evaluate(
      [&](int i) { return slack(zs[static_cast<std::size_t>(i)]); },
      static_cast<int>(zs.size()), policy);
  const int worst = kernels::argmin(values);
  report.samples = static_cast<int>(zs.size());
  report.min_slack = values[static_cast<std::size_t>(worst)];
  report.min_z = zs[static_cast<std::size_t>(worst)];

  // Local descent on the slack from the worst sample, in exp_p coordinates.
  if (budget.refine_iters > 0) {
    const auto basis = tangent_basis(p);
    const Eigen::VectorXd c0 = to_coefficients(basis, log(p, report.min_z));
    auto point_at = [&](const Eigen::VectorXd& c) {
      Eigen::VectorXd cc = c;
      const double r = cc.norm();
      if (r > budget.sample_radius) cc *= budget.sample_radius / r;
      return exp(p, from_coefficients(p, basis, cc));
    };
    const NelderMeadResult nm =
        nelder_mead([&](const Eigen::VectorXd& c) { return slack(point_at(c)); }, c0,
                    Eigen::VectorXd::Constant(c0.size(), 0.05 * budget.sample_radius),
                    budget.refine_iters);
    if (nm.value < report.min_slack) {
      report.min_slack = nm.value;
      report.min_z = point_at(nm.x);
    }
  }
  report.inequality_pass = report.min_slack >= -budget.tol;

  double conj = 0;
  const auto h = f.radial_profile();
  if (h && dist(*f.center, p) < 1e-12) {
    conj = radial_conjugate(*h, p, y, budget).value;
    report.exact_conjugate = true;
  } else {
    conj = conjugate(f, p, y, budget, {false, policy}).value.value;
  }
  report.equality_residual = fx + conj - hxy;
  report.equality_hard_failure = report.equality_residual < -budget.tol;
  report.pass = report.inequality_pass && !report.equality_hard_failure;
  return report;
}

Tangent radial_subgradient(const HSpec& h, const Point& p, const Point& x) {
  require_same_space(p.space, x.space, "radial_subgradient");
  const double d = dist(x, p);
  if (d < 1e-12) return zero_tangent(x);
  return (-h.derivative(d) / d) * log(x, p);
}

Tangent subgradient_from_equality(const FunctionSpec& f, const Point& p, const Point& x,
                                  const Point& y) {
  require_same_space(f.space, p.space, "subgradient_from_equality");
  require_same_space(p.space, x.space, "subgradient_from_equality");
  require_same_space(p.space, y.space, "subgradient_from_equality");
  const double d = dist(y, p);
  if (d < 1e-12) throw std::invalid_argument("subgradient_from_equality: y = p");
  const Tangent eta = (-1.0 / d) * log(p, y);
  const Tangent u = -asymptote(x, Ray{p, eta}).dir;
  return d * u;
}

Tangent transport_subgradient(const IsometryRep& iso, const Point& p, const Point& q,
                              const Point& b, const Tangent& u) {
  const Point iq = apply(iso, q);
  if (dist(iq, p) > 1e-8 * (1.0 + p.coords.norm())) {
    throw std::invalid_argument("transport_subgradient: I(q) != p");
  }
  return differential(iso, b, u);
}

}  // namespace hadamard
