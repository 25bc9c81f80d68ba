#include "hadamard/cli/suites.hpp"

#include "hadamard/cli/literals.hpp"
#include "hadamard/duality.hpp"
#include "hadamard/horoball.hpp"
#include "hadamard/isometry.hpp"
#include "hadamard/rigidity.hpp"
#include "hadamard/sampling.hpp"
#include "hadamard/subgradient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace hadamard::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Ctx {
  SpaceDescriptor space;
  Point o;
  std::uint64_t seed;
  ExecutionPolicy policy;
  Rng rng;

  Ctx(const SpaceDescriptor& s, std::uint64_t sd, ExecutionPolicy pol, std::uint64_t salt)
      : space(s), o(origin(s)), seed(sd), policy(pol), rng(sd * 0x9e3779b97f4a7c15ULL + salt) {}

  Point near(double radius) { return random_point_near(o, radius, rng); }
  Tangent tangent(const Point& x, double max_len) {
    std::uniform_real_distribution<double> u(0.0, max_len);
    return u(rng) * random_unit_tangent(x, rng);
  }
  SearchBudget budget() const {
    SearchBudget b;
    b.seed = seed;
    return b;
  }
};

std::string wit(const Point& x) { return format_coords(x.coords); }

bool is_hyperbolic(const SpaceDescriptor& s) { return s.kind() == SpaceKind::Hyperbolic; }
bool is_flat(const SpaceDescriptor& s) { return s.kind() == SpaceKind::Euclidean; }
bool is_h_times_r(const SpaceDescriptor& s) {
  return s.kind() == SpaceKind::Product && s.first().kind() == SpaceKind::Hyperbolic &&
         s.second().kind() == SpaceKind::Euclidean;
}

// Curvature scale of the hyperbolic part, if any.
double hyperbolic_k(const SpaceDescriptor& s) {
  if (is_hyperbolic(s)) return s.k();
  if (is_h_times_r(s)) return s.first().k();
  return 0;
}

// Unit vector at o along basis element i.
Tangent basis_dir(const Point& o, int i) { return tangent_basis(o)[static_cast<std::size_t>(i)]; }

// Point at distance d from o inside the hyperbolic factor (or the whole space).
Point hyperbolic_point_at(const Ctx& c, double d) { return exp(c.o, d * basis_dir(c.o, 0)); }

// Tangent at o along the R factor of H^n x R.
Tangent flat_factor_dir(const Point& o) {
  const Point a = factor_point(o, 0);
  const Point b = factor_point(o, 1);
  Eigen::VectorXd e = Eigen::VectorXd::Ones(1);
  return join_tangents(o, zero_tangent(a), Tangent{b, e});
}

double angle(const Point& p, const Tangent& a, const Tangent& b) {
  const double c = std::abs(inner(p, a, b)) / (norm(a) * norm(b));
  return std::acos(std::min(1.0, c));
}

// ---------------------------------------------------------------- geometry

void geometry_suite(Ctx& c, SuiteResult& r) {
  double roundtrip = 0, exp_norm = 0, symmetry = 0, triangle = kInf;
  Point w_rt = c.o;
  for (int i = 0; i < 200; ++i) {
    const Point x = c.near(2.0);
    const Tangent v = c.tangent(x, 3.0);
    const Point y = exp(x, v);
    const double e = norm(log(x, y) - v);
    if (e > roundtrip) roundtrip = e, w_rt = x;
    exp_norm = std::max(exp_norm, std::abs(dist(x, y) - norm(v)));
    const Point z = c.near(2.0);
    symmetry = std::max(symmetry, std::abs(dist(x, z) - dist(z, x)));
    triangle = std::min(triangle, dist(x, y) + dist(y, z) - dist(x, z));
  }
  r.add_property("exp_log_roundtrip", roundtrip, 1e-8, roundtrip <= 1e-8, wit(w_rt));
  r.add_property("dist_exp_norm", exp_norm, 1e-9, exp_norm <= 1e-9);
  r.add_property("dist_symmetry", symmetry, 1e-12, symmetry <= 1e-12);
  r.add_property("triangle_inequality", triangle, 1e-9, triangle >= -1e-9);

  double k_min = kInf, k_max = -kInf;
  if (c.space.dim() >= 2) {
    for (int i = 0; i < 100; ++i) {
      const Point x = c.near(2.0);
      const Tangent u = random_unit_tangent(x, c.rng);
      const Tangent v = orthonormal_completion(x, u).front();
      const double k = sectional(x, u, v);
      k_min = std::min(k_min, k);
      k_max = std::max(k_max, k);
    }
    r.add_property("sectional_nonpositive", k_max, 1e-9, k_max <= 1e-9);
    switch (c.space.kind()) {
      case SpaceKind::Euclidean:
        r.add_value("sectional_flat", 0.0, std::max(std::abs(k_min), std::abs(k_max)), 1e-9);
        break;
      case SpaceKind::Hyperbolic: {
        const double k2 = c.space.k() * c.space.k();
        const double dev = std::max(std::abs(k_min + k2), std::abs(k_max + k2));
        r.add_value("sectional_constant", -k2, -k2 + dev, 1e-9);
        break;
      }
      case SpaceKind::SPD:
        r.add_property("sectional_lower_bound", k_min, 1e-9, k_min >= -0.5 - 1e-9);
        break;
      case SpaceKind::Product: {
        const double k = hyperbolic_k(c.space);
        r.add_property("sectional_lower_bound", k_min, 1e-9, k_min >= -k * k - 1e-9);
        break;
      }
    }
  }
}

// ---------------------------------------------------------------- horoball

void horoball_suite(Ctx& c, SuiteResult& r) {
  const SearchBudget budget = c.budget();
  const Ray ray = make_ray(c.o, random_unit_tangent(c.o, c.rng));
  r.add_value("busemann_at_base", 0.0, busemann(ray, c.o), 1e-12);

  double linear = 0;
  for (double t = -3; t <= 3; t += 0.5) {
    linear = std::max(linear, std::abs(busemann(ray, exp(c.o, t * ray.dir)) + t));
  }
  r.add_property("along_ray_linearity", linear, 1e-9, linear <= 1e-9);

  double lipschitz = -kInf, convex = kInf, grad = 0, kernel = -kInf, numeric = 0;
  Point w_num = c.o;
  for (int i = 0; i < 50; ++i) {
    const Point x = c.near(2.0);
    const Point y = c.near(2.0);
    lipschitz = std::max(lipschitz, std::abs(busemann(ray, x) - busemann(ray, y)) - dist(x, y));
    const Tangent u = random_unit_tangent(x, c.rng);
    const double b0 = busemann(ray, x);
    const double h = 0.1;
    convex = std::min(convex, busemann(ray, exp(x, h * u)) - 2 * b0 + busemann(ray, exp(x, -h * u)));
    const Tangent g = fd_gradient([&](const Point& z) { return busemann(ray, z); }, x, 1e-4);
    grad = std::max(grad, std::abs(norm(g) - 1.0));
    kernel = std::max(kernel, std::abs(h_kernel(c.o, x, y)) - dist(x, c.o) * dist(y, c.o));
    const double e = std::abs(busemann(ray, x) - busemann_numeric(ray, x, budget));
    if (e > numeric) numeric = e, w_num = x;
  }
  r.add_property("one_lipschitz", lipschitz, 1e-9, lipschitz <= 1e-9);
  r.add_property("geodesic_convexity", convex, 1e-9, convex >= -1e-9);
  r.add_property("unit_gradient", grad, 1e-4, grad <= 1e-4);
  r.add_property("kernel_bound", kernel, 1e-9, kernel <= 1e-9);
  r.add_property("closed_form_vs_numeric_limit", numeric, 1e-6, numeric <= 1e-6, wit(w_num));

  if (is_flat(c.space)) {
    double dot = 0;
    for (int i = 0; i < 50; ++i) {
      const Point z = c.near(3.0);
      const Point y = c.near(3.0);
      const double ref = (z.coords - c.o.coords).dot(y.coords - c.o.coords);
      dot = std::max(dot, std::abs(h_kernel(c.o, z, y) - ref));
    }
    r.add_property("kernel_inner_product", dot, 1e-12, dot <= 1e-12);
  }
  if (is_hyperbolic(c.space)) {
    const double k = c.space.k();
    const Ray e1 = make_ray(c.o, basis_dir(c.o, 0));
    const Point x = exp(c.o, basis_dir(c.o, 1));
    r.add_value("busemann_perpendicular_unit", std::log(std::cosh(k)) / k, busemann(e1, x), 1e-12,
                wit(x));
  }

  double drift = 0, spread_lo = kInf, spread_hi = -kInf;
  for (int i = 0; i < 10; ++i) {
    const Point q = c.near(2.0);
    const Ray a = asymptote(q, ray);
    const double d0 = dist(q, c.o);
    for (double t = 0; t <= 10; t += 1) {
      drift = std::max(drift, dist(ray_point(ray, t), ray_point(a, t)) - d0);
    }
    const Point x = c.near(2.0);
    const double diff = busemann(ray, x) - busemann(a, x);
    const double base = busemann(ray, q) - busemann(a, q);
    spread_lo = std::min(spread_lo, diff - base);
    spread_hi = std::max(spread_hi, diff - base);
  }
  r.add_property("asymptote_stays_close", drift, 1e-4, drift <= 1e-4);
  const double spread = std::max(std::abs(spread_lo), std::abs(spread_hi));
  r.add_property("asymptotic_busemann_difference_constant", spread, 1e-6, spread <= 1e-6);
}

// ----------------------------------------------------------------- duality

void duality_suite(Ctx& c, SuiteResult& r) {
  const SearchBudget budget = c.budget();
  ConjugateOptions opts;
  opts.policy = c.policy;

  const HSpec quad = HSpec::quadratic(1.0);
  const FunctionSpec radial = FunctionSpec::radial(quad, c.o);
  const FunctionSpec half = FunctionSpec::half_dist_sq(c.o);
  double reduction = 0, self = 0;
  Point w_red = c.o;
  for (int i = 0; i < 5; ++i) {
    const Point x = c.near(2.0);
    const ConjugateResult sup = conjugate(radial, c.o, x, budget, opts);
    const double e = std::abs(sup.value.value - radial_conjugate(quad, c.o, x).value);
    if (e > reduction) reduction = e, w_red = x;
    self = std::max(self, std::abs(conjugate(half, c.o, x, budget, opts).value.value - eval(half, x)));
  }
  r.add_property("radial_reduction_quadratic", reduction, 1e-3, reduction <= 1e-3, wit(w_red));
  r.add_property("half_dist_sq_self_conjugate", self, 1e-3, self <= 1e-3);

  if (is_flat(c.space)) {
    double worst = 0;
    for (int i = 0; i < 3; ++i) {
      worst = std::max(worst, std::abs(nonlinearity(c.o, c.near(2.0), budget, c.policy).value));
    }
    r.add_value("nonlinearity_constant", 0.0, worst, 1e-9);
  } else if (const double k = hyperbolic_k(c.space); k > 0) {
    const Point y = hyperbolic_point_at(c, 1.0);
    const double expected = -std::log(std::cosh(k / 2)) / k;
    r.add_value("nonlinearity_constant", expected, nonlinearity(c.o, y, budget, c.policy).value,
                2e-3, wit(y));
    const Point y2 = hyperbolic_point_at(c, 2.0);
    r.add_value("nonlinearity_distance_two", -2.0 * std::log(std::cosh(k)) / k,
                nonlinearity(c.o, y2, budget, c.policy).value, 2e-3, wit(y2));
  } else {
    const Point y = c.near(1.5);
    const double n = nonlinearity(c.o, y, budget, c.policy).value;
    r.add_property("nonlinearity_nonpositive", n, 0.0, n <= 0.0, wit(y));
  }

  SearchBudget fy = budget;
  fy.sample_radius = 3.0;
  const Ray ray = make_ray(c.o, random_unit_tangent(c.o, c.rng));
  for (const auto& [name, f] : {std::pair{"fenchel_young_radial", radial},
                                std::pair{"fenchel_young_busemann", FunctionSpec::busemann(ray)}}) {
    const FenchelYoungReport rep = fenchel_young_audit(f, c.o, 100, c.seed, fy, c.policy);
    r.add_property(name, rep.min_slack, 1e-9, rep.violations == 0, wit(rep.y_witness));
  }

  SearchBudget small = budget;
  small.t_max = 6.0;
  double mono = -kInf;
  for (int i = 0; i < 3; ++i) {
    const Point x = c.near(2.0);
    ConjugateOptions no_probe = opts;
    no_probe.probe_divergence = false;
    const double a = conjugate(radial, c.o, x, small, no_probe).value.value;
    const double b = conjugate(radial, c.o, x, budget, no_probe).value.value;
    mono = std::max(mono, a - b);
  }
  r.add_property("conjugate_monotone_in_t_max", mono, 1e-9, mono <= 1e-9);

  const ConjugateResult div = conjugate(FunctionSpec::busemann(ray), c.o, c.o, budget, opts);
  r.add_property("busemann_conjugate_diverges_at_base", div.value.value, budget.divergence_slack,
                 div.value.status == ExtStatus::Diverging);
}

// ------------------------------------------------------------- subgradient

void subgradient_suite(Ctx& c, SuiteResult& r) {
  SearchBudget budget = c.budget();
  budget.n_samples = 300;
  budget.sample_radius = 4.0;
  const HSpec quad = HSpec::quadratic(1.0);
  const FunctionSpec f = FunctionSpec::radial(quad, c.o);

  double residual = 0, rejected_slack = -kInf, round_trip = 0;
  int accepted = 0, rejected = 0;
  const int n = 5;
  for (int i = 0; i < n; ++i) {
    const Point x = c.near(2.0);
    const Tangent v = radial_subgradient(quad, c.o, x);
    const SubgradientReport good = is_subgradient(f, c.o, x, v, budget, c.policy);
    residual = std::max(residual, std::abs(good.equality_residual));
    accepted += good.pass ? 1 : 0;
    const SubgradientReport bad = is_subgradient(f, c.o, x, 2.0 * v, budget, c.policy);
    rejected += (!bad.pass && bad.min_slack < -1e-3) ? 1 : 0;
    rejected_slack = std::max(rejected_slack, bad.min_slack);
    const Tangent back = subgradient_from_equality(f, c.o, x, good.witness.y);
    round_trip = std::max(round_trip, norm(back - v));
  }
  r.add_property("radial_equality_residual", residual, 1e-6, residual <= 1e-6);
  r.add_value("gradient_accepted", n, accepted, 0.0);
  r.add_value("scaled_gradient_rejected", n, rejected, 0.0);
  r.add_property("scaled_gradient_worst_slack", rejected_slack, 1e-3, rejected_slack < -1e-3);
  r.add_property("equality_round_trip", round_trip, 1e-6, round_trip <= 1e-6);

  const SubgradientWitness zero = witness_point(c.o, c.o, radial_subgradient(quad, c.o, c.o));
  r.add_value("zero_subgradient_witness_is_base", 0.0, dist(zero.y, c.o), 1e-12);

  if (is_flat(c.space)) {
    double shift = 0;
    for (int i = 0; i < 20; ++i) {
      const Point x = c.near(3.0);
      const Tangent v = c.tangent(x, 3.0);
      shift = std::max(shift, (witness_point(c.o, x, v).y.coords - c.o.coords - v.vec).norm());
    }
    r.add_property("witness_translation", shift, 1e-12, shift <= 1e-12);
  }
}

// ---------------------------------------------------------------- rigidity

void rigidity_suite(Ctx& c, SuiteResult& r) {
  const SearchBudget budget = c.budget();
  if (c.space.dim() >= 2) {
    const ZeroRicciResult zr = zero_ricci_direction(c.o, budget, c.policy);
    switch (c.space.kind()) {
      case SpaceKind::Hyperbolic: {
        const double k = c.space.k();
        r.add_value("min_abs_ricci", k * k, zr.min_abs_ricci, 1e-9);
        break;
      }
      case SpaceKind::Euclidean:
        r.add_value("min_abs_ricci", 0.0, zr.min_abs_ricci, 1e-9);
        break;
      case SpaceKind::SPD: {
        r.add_value("min_abs_ricci", 0.0, zr.min_abs_ricci, 1e-10);
        const Tangent scale = make_tangent(c.o, c.o.coords);
        const double a = angle(c.o, zr.argmin, scale);
        r.add_property("zero_ricci_along_scaling", a, 1e-3, a <= 1e-3);
        break;
      }
      case SpaceKind::Product: {
        r.add_value("min_abs_ricci", 0.0, zr.min_abs_ricci, 1e-9);
        if (is_h_times_r(c.space)) {
          const double a = angle(c.o, zr.argmin, flat_factor_dir(c.o));
          r.add_property("zero_ricci_along_flat_factor", a, 1e-3, a <= 1e-3);
        }
        break;
      }
    }
  }

  if (c.space.kind() == SpaceKind::SPD) {
    const int n = c.space.order();
    const AffinityReport ld = affinity_report(FunctionSpec::logdet(c.space), c.space, 100, c.seed,
                                              c.policy);
    r.add_property("logdet_second_difference", ld.max_second_difference, 1e-8,
                   ld.max_second_difference <= 1e-8);
    r.add_value("logdet_gradient_norm", std::sqrt(static_cast<double>(n)), ld.gradient_norm_mean,
                1e-6);
    r.add_property("logdet_gradient_norm_spread", ld.gradient_norm_stddev, 1e-6,
                   ld.gradient_norm_stddev <= 1e-6);
    double split = 0, ricci = 0;
    for (int i = 0; i < 100; ++i) split = std::max(split, splitting_check_spd(c.near(2.0), c.near(2.0)));
    for (int i = 0; i < 20; ++i) {
      const Point x = c.near(2.0);
      const Tangent u = make_tangent(x, x.coords);
      ricci = std::max(ricci, std::abs(ricci_dir(x, (1.0 / norm(u)) * u)));
    }
    r.add_property("splitting_residual", split, 1e-8, split <= 1e-8);
    r.add_value("ricci_along_scaling", 0.0, ricci, 1e-10);
  }

  if (is_flat(c.space) || is_hyperbolic(c.space) || is_h_times_r(c.space)) {
    const Tangent dir = is_h_times_r(c.space) ? flat_factor_dir(c.o) : basis_dir(c.o, 0);
    const AffinityReport b = affinity_report(FunctionSpec::busemann(make_ray(c.o, dir)), c.space, 100,
                                             c.seed, c.policy);
    if (is_hyperbolic(c.space)) {
      r.add_property("busemann_not_affine", b.max_second_difference, 1e-3,
                     b.max_second_difference >= 1e-3, wit(b.witness_base));
    } else {
      r.add_property("busemann_affine", b.max_second_difference, 1e-10,
                     b.max_second_difference <= 1e-10);
    }
  }

  const Point z = c.near(1.0);
  const Point x = c.near(2.0);
  const GramProbe through = gram_probe(c.space, z, x, 100, c.seed, true, c.policy);
  r.add_property("gram_linear_through_base", through.max_abs_second_difference, 1e-8,
                 through.max_abs_second_difference <= 1e-8);
  if (is_flat(c.space)) {
    const GramProbe g = gram_probe(c.space, z, x, 200, c.seed, false, c.policy);
    r.add_property("gram_linear", g.max_abs_second_difference, 1e-10, g.linear);
  } else if (is_hyperbolic(c.space)) {
    const GramProbe g = gram_probe(c.space, z, x, 1000, c.seed, false, c.policy);
    r.add_property("gram_nonconvex", g.min_second_difference, 1e-3, g.nonconvex,
                   wit(g.witness_base));
  }
}

// ---------------------------------------------------------------- isometry

void isometry_suite(Ctx& c, SuiteResult& r) {
  SearchBudget budget = c.budget();
  double dpres = 0, npres = 0, inv = 0, chain = 0, exact = 0;
  const HSpec quad = HSpec::quadratic(1.0);
  std::vector<IsometryRep> isos;
  for (int i = 0; i < 20; ++i) isos.push_back(random_isometry(c.space, c.seed * 1000 + i));
  for (std::size_t i = 0; i < isos.size(); ++i) {
    const IsometryRep& g = isos[i];
    const IsometryRep& h = isos[(i + 1) % isos.size()];
    const IsometryRep gi = inverse(g);
    const Point q = apply(gi, c.o);
    for (int j = 0; j < 5; ++j) {
      const Point x = c.near(2.0);
      const Point y = c.near(2.0);
      dpres = std::max(dpres, std::abs(dist(apply(g, x), apply(g, y)) - dist(x, y)));
      const Tangent u = random_unit_tangent(x, c.rng);
      npres = std::max(npres, std::abs(norm(differential(g, x, u)) - 1.0));
      inv = std::max(inv, dist(apply(gi, apply(g, x)), x));
      const Tangent lhs = differential(compose(g, h), x, u);
      const Tangent rhs = differential(g, apply(h, x), differential(h, x, u));
      chain = std::max(chain, norm(Tangent{lhs.base, lhs.vec - rhs.vec}));
      exact = std::max(exact, std::abs(radial_conjugate(quad, c.o, apply(g, x)).value -
                                       radial_conjugate(quad, q, x).value));
    }
  }
  r.add_property("distance_preserved", dpres, 1e-10, dpres <= 1e-10);
  r.add_property("differential_norm_preserved", npres, 1e-10, npres <= 1e-10);
  r.add_property("inverse_round_trip", inv, 1e-9, inv <= 1e-9);
  r.add_property("chain_rule", chain, 1e-9, chain <= 1e-9);
  r.add_property("conjugate_law_exact", exact, 1e-8, exact <= 1e-8);

  const FunctionSpec f = FunctionSpec::radial(quad, c.o);
  ConjugateOptions opts;
  opts.policy = c.policy;
  double sup = 0;
  for (int i = 0; i < 2; ++i) {
    const IsometryRep& g = isos[static_cast<std::size_t>(i)];
    const Point q = apply(inverse(g), c.o);
    const Point x = c.near(1.5);
    const double a = conjugate(f, c.o, apply(g, x), budget, opts).value.value;
    const double b = conjugate(compose(f, g), q, x, budget, opts).value.value;
    sup = std::max(sup, std::abs(a - b));
  }
  r.add_property("conjugate_law_sup", sup, 2e-3, sup <= 2e-3);

  budget.n_samples = 300;
  budget.sample_radius = 4.0;
  int agree = 0;
  const int n = 4;
  for (int i = 0; i < n; ++i) {
    const IsometryRep& g = isos[static_cast<std::size_t>(i)];
    const Point q = apply(inverse(g), c.o);
    const FunctionSpec fg = compose(f, g);
    const Point b = c.near(1.5);
    const Tangent u = (i % 2 == 0 ? 1.0 : 2.0) * radial_subgradient(quad, q, b);
    const bool before = is_subgradient(fg, q, b, u, budget, c.policy).pass;
    const Tangent w = transport_subgradient(g, c.o, q, b, u);
    const bool after = is_subgradient(f, c.o, apply(g, b), w, budget, c.policy).pass;
    agree += before == after ? 1 : 0;
  }
  r.add_value("transport_verdicts_agree", n, agree, 0.0);
}

using SuiteFn = void (*)(Ctx&, SuiteResult&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> m = {
      {"geometry", geometry_suite},   {"horoball", horoball_suite},
      {"duality", duality_suite},     {"subgradient", subgradient_suite},
      {"rigidity", rigidity_suite},   {"isometry", isometry_suite},
  };
  return m;
}

// FNV-1a, so seeds replay across standard libraries.
std::uint64_t salt(const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : name) h = (h ^ ch) * 1099511628211ULL;
  return h;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"geometry",    "horoball", "duality",
                                                 "subgradient", "rigidity", "isometry"};
  return names;
}

SuiteResult run_suite(const std::string& suite, const SpaceDescriptor& space,
                      const std::string& space_label, std::uint64_t seed, ExecutionPolicy policy) {
  SuiteResult out;
  out.suite = suite;
  out.space = space_label;
  out.seed = seed;
  if (suite == "all") {
    for (const auto& name : suite_names()) {
      SuiteResult part = run_suite(name, space, space_label, seed, policy);
      for (auto& cs : part.cases) {
        cs.name = name + "/" + cs.name;
        out.cases.push_back(std::move(cs));
      }
    }
    out.tally();
    return out;
  }
  const auto it = registry().find(suite);
  if (it == registry().end()) throw UsageError("unknown suite '" + suite + "'");
  Ctx ctx(space, seed, policy, salt(suite));
  it->second(ctx, out);
  out.tally();
  return out;
}

}  // namespace hadamard::cli
