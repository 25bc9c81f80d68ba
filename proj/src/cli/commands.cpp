#include "hadamard/cli/commands.hpp"

#include "hadamard/cli/literals.hpp"
#include "hadamard/cli/report_io.hpp"
#include "hadamard/cli/suites.hpp"
#include "hadamard/duality.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/horoball.hpp"
#include "hadamard/rigidity.hpp"
#include "hadamard/subgradient.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>

namespace hadamard::cli {

namespace {

constexpr double kConjugateTol = 1e-3;
constexpr double kLevelTol = 1e-6;
constexpr double kNonlinearityTol = 2e-3;

struct Common {
  std::string space;
  double k = 1.0;
  bool serial = false;
  std::string out;

  ExecutionPolicy policy() const {
    return serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
  }
};

void add_common(CLI::App* app, Common& c, bool space_required = true) {
  auto* opt = app->add_option("--space", c.space, "e2 e3 h2 h3 spd2 spd3 h2xr");
  if (space_required) opt->required();
  app->add_option("--k", c.k, "curvature scale of hyperbolic factors")->capture_default_str();
  app->add_flag("--serial", c.serial, "use the serial reference kernels");
  app->add_option("--out", c.out, "output file (stdout when omitted)");
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("write to stdout failed");
  } else {
    write_text(path, text);
  }
}

void emit_report(SuiteResult& r, const std::string& path, double runtime_ms) {
  r.summary.runtime_ms = round12(runtime_ms);
  r.tally();
  if (path.empty()) {
    emit("", to_json(r).dump(2) + "\n");
  } else {
    write_report(r, path, format_for_path(path));
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);
  return buf;
}

// Polar samples r in [0, radius], theta in [0, 2 pi) in the plane of the
// first two basis vectors at p.
std::vector<Point> polar_grid(const Point& p, int n, double radius) {
  if (n < 1) throw UsageError("--grid must be positive");
  if (p.space.dim() < 2) throw UsageError("polar grids need dimension at least 2");
  const auto basis = tangent_basis(p);
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) {
    const double r = n == 1 ? radius : radius * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double th = 2.0 * std::numbers::pi * j / n;
      out.push_back(exp(p, r * std::cos(th) * basis[0] + r * std::sin(th) * basis[1]));
    }
  }
  return out;
}

std::pair<double, double> polar_coords(const Point& p, const Point& x) {
  const Tangent v = log(p, x);
  const double r = norm(v);
  if (r == 0 || p.space.dim() < 2) return {r, 0.0};
  const Eigen::VectorXd c = to_coefficients(tangent_basis(p), v);
  double th = std::atan2(c(1), c(0));
  if (th < 0) th += 2.0 * std::numbers::pi;
  return {r, th};
}

std::vector<Point> read_points(const SpaceDescriptor& space, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot read points file '" + path + "'");
  std::vector<Point> out;
  std::string line;
  while (std::getline(is, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(parse_point(space, line.substr(b, e - b + 1)));
  }
  if (out.empty()) throw UsageError("points file '" + path + "' is empty");
  return out;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  Common c;
  std::string suite = "all";
  std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const SpaceDescriptor space = parse_space(a.c.space, a.c.k);
  SuiteResult r = run_suite(a.suite, space, a.c.space, a.seed, a.c.policy());
  emit_report(r, a.c.out, elapsed_ms(start));
  return r.all_passed() ? 0 : 1;
}

// --------------------------------------------------------------- conjugate

struct ConjugateArgs {
  Common c;
  std::string fn;
  std::string p;
  std::string points;
  int grid = 0;
  double radius = 2.0;
  std::string budget;
};

int cmd_conjugate(const ConjugateArgs& a) {
  const SpaceDescriptor space = parse_space(a.c.space, a.c.k);
  const Point p = parse_point(space, a.p);
  const FunctionSpec f = parse_function(space, a.fn, p);
  const SearchBudget budget = parse_budget(a.budget);
  if (a.points.empty() == (a.grid == 0)) throw UsageError("give exactly one of --points and --grid");
  const std::vector<Point> xs = a.grid > 0 ? polar_grid(p, a.grid, a.radius) : read_points(space, a.points);

  const auto profile = f.radial_profile();
  const bool centred = profile && f.center && dist(*f.center, p) == 0.0;
  ConjugateOptions opts;
  opts.policy = a.c.policy();
  std::string csv = "r,theta,conjugate,radial_oracle,abs_diff,status\n";
  bool ok = true;
  for (const Point& x : xs) {
    const ConjugateResult res = conjugate(f, p, x, budget, opts);
    const auto [r, th] = polar_coords(p, x);
    double oracle = std::nan(""), diff = std::nan("");
    if (centred) {
      const ExtScalar o = radial_conjugate(*profile, p, x, budget);
      oracle = o.is_finite() ? o.value : INFINITY;
      if (o.is_finite() && res.value.is_finite()) {
        diff = std::abs(res.value.value - o.value);
        ok = ok && diff <= kConjugateTol;
      } else {
        ok = ok && o.is_finite() == res.value.is_finite();
      }
    }
    csv += num(r) + ',' + num(th) + ',' + num(res.value.value) + ',' + num(oracle) + ',' +
           num(diff) + ',' + to_string(res.value.status) + '\n';
  }
  emit(a.c.out, csv);
  return ok ? 0 : 1;
}

// ------------------------------------------------------------ nonlinearity

struct NonlinearityArgs {
  Common c;
  double radius = 2.0;
  int steps = 8;
  std::uint64_t seed = 0;
};

int cmd_nonlinearity(const NonlinearityArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const SpaceDescriptor space = parse_space(a.c.space, a.c.k);
  if (!(a.radius > 0) || a.steps < 1) throw UsageError("--radius and --steps must be positive");
  const Point p = origin(space);
  SearchBudget budget;
  budget.seed = a.seed;
  SuiteResult r;
  r.suite = "nonlinearity";
  r.space = a.c.space;
  r.seed = a.seed;
  const Tangent e = tangent_basis(p).front();
  double ball_min = 0;
  bool decreasing = true;
  for (int i = 1; i <= a.steps; ++i) {
    const double d = a.radius * i / a.steps;
    const Point y = exp(p, d * e);
    const double n = nonlinearity(p, y, budget, a.c.policy()).value;
    decreasing = decreasing && n <= ball_min + 1e-9;
    ball_min = std::min(ball_min, n);
    char name[64];
    std::snprintf(name, sizeof name, "nonlinearity_d=%.6g", d);
    if (space.kind() == SpaceKind::Hyperbolic) {
      const double k = space.k();
      r.add_value(name, -(d / k) * std::log(std::cosh(k * d / 2)), n, kNonlinearityTol,
                  format_coords(y.coords));
    } else if (space.kind() == SpaceKind::Euclidean) {
      r.add_value(name, 0.0, n, 1e-9, format_coords(y.coords));
    } else {
      r.add_property(name, n, 0.0, n <= 0.0, format_coords(y.coords));
    }
  }
  // Lower bound C(R) over the ball, estimated along the sampled geodesic.
  const bool monotone = decreasing || space.kind() != SpaceKind::Hyperbolic;
  r.add_property("ball_minimum", ball_min, 1e-9, std::isfinite(ball_min) && monotone);
  emit_report(r, a.c.out, elapsed_ms(start));
  return r.all_passed() ? 0 : 1;
}

// --------------------------------------------------------------- curvature

struct CurvatureArgs {
  Common c;
  std::string point;
  std::uint64_t seed = 0;
};

int cmd_curvature(const CurvatureArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const SpaceDescriptor space = parse_space(a.c.space, a.c.k);
  const Point x = a.point.empty() ? origin(space) : parse_point(space, a.point);
  if (space.dim() < 2) throw UsageError("curvature needs dimension at least 2");
  SuiteResult r;
  r.suite = "curvature";
  r.space = a.c.space;
  r.seed = a.seed;
  const auto basis = tangent_basis(x);
  const int n = space.dim();
  double lo = 0;
  switch (space.kind()) {
    case SpaceKind::Euclidean: lo = 0; break;
    case SpaceKind::Hyperbolic: lo = -space.k() * space.k(); break;
    case SpaceKind::SPD: lo = -0.5; break;
    case SpaceKind::Product: {
      for (int i = 0; i < 2; ++i) {
        const SpaceDescriptor& f = i == 0 ? space.first() : space.second();
        if (f.kind() == SpaceKind::Hyperbolic) lo = std::min(lo, -f.k() * f.k());
      }
      break;
    }
  }
  const bool constant = space.kind() != SpaceKind::SPD && space.kind() != SpaceKind::Product;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double s = sectional(x, basis[i], basis[j]);
      const std::string name = "sectional_" + std::to_string(i) + "_" + std::to_string(j);
      if (constant) r.add_value(name, lo, s, 1e-9);
      else r.add_property(name, s, 1e-9, s >= lo - 1e-9 && s <= 1e-9);
    }
  }
  for (int i = 0; i < n; ++i) {
    const double ric = ricci_dir(x, basis[i]);
    const std::string name = "ricci_" + std::to_string(i);
    if (constant) r.add_value(name, lo, ric, 1e-9);
    else r.add_property(name, ric, 1e-9, ric >= lo - 1e-9 && ric <= 1e-9);
  }
  SearchBudget budget;
  budget.seed = a.seed;
  const ZeroRicciResult z = zero_ricci_direction(x, budget, a.c.policy());
  const double expected = space.kind() == SpaceKind::Hyperbolic ? space.k() * space.k() : 0.0;
  r.add_value("min_abs_ricci", expected, z.min_abs_ricci, 1e-9, format_coords(z.argmin.vec));
  emit_report(r, a.c.out, elapsed_ms(start));
  return r.all_passed() ? 0 : 1;
}

// --------------------------------------------------------- busemann-levels

struct LevelsArgs {
  Common c;
  std::string ray;
  int grid = 16;
  double radius = 2.0;
  std::string budget;
};

int cmd_busemann_levels(const LevelsArgs& a) {
  const SpaceDescriptor space = parse_space(a.c.space, a.c.k);
  const Ray ray = parse_ray(space, a.ray);
  const SearchBudget budget = parse_budget(a.budget);
  const std::vector<Point> xs = polar_grid(ray.base, a.grid, a.radius);
  const int count = static_cast<int>(xs.size());
  std::vector<double> closed(xs.size());
  const auto numeric = kernels::evaluate(
      [&](int i) {
        closed[static_cast<std::size_t>(i)] = busemann(ray, xs[static_cast<std::size_t>(i)]);
        return busemann_numeric(ray, xs[static_cast<std::size_t>(i)], budget);
      },
      count, a.c.policy());
  std::string csv = "r,theta,busemann,busemann_numeric,abs_diff\n";
  bool ok = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto [r, th] = polar_coords(ray.base, xs[i]);
    const double diff = std::abs(closed[i] - numeric[i]);
    ok = ok && diff <= kLevelTol;
    csv += num(r) + ',' + num(th) + ',' + num(closed[i]) + ',' + num(numeric[i]) + ',' + num(diff) + '\n';
  }
  emit(a.c.out, csv);
  return ok ? 0 : 1;
}

// ----------------------------------------------------------------- subdiff

struct SubdiffArgs {
  Common c;
  std::string fn;
  std::string p;
  std::string x;
  std::string v;
  std::string budget;
};

int cmd_subdiff(const SubdiffArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const SpaceDescriptor space = parse_space(a.c.space, a.c.k);
  const Point p = parse_point(space, a.p);
  const Point x = parse_point(space, a.x);
  const Tangent v = parse_vector(x, a.v);
  const FunctionSpec f = parse_function(space, a.fn, p);
  const SearchBudget budget = parse_budget(a.budget);
  const SubgradientReport rep = is_subgradient(f, p, x, v, budget, a.c.policy());
  SuiteResult r;
  r.suite = "subdiff";
  r.space = a.c.space;
  r.seed = budget.seed;
  r.add_property("inequality_min_slack", rep.min_slack, budget.tol, rep.inequality_pass,
                 format_coords(rep.min_z.coords));
  r.add_property(rep.exact_conjugate ? "equality_residual_exact" : "equality_residual_sup",
                 rep.equality_residual, budget.tol, !rep.equality_hard_failure,
                 format_coords(rep.witness.y.coords));
  emit_report(r, a.c.out, elapsed_ms(start));
  return rep.pass ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Busemann-based convex analysis on Hadamard spaces"};
  app.require_subcommand(1);
  std::function<int()> action;

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  add_common(verify, va.c);
  verify->add_option("--suite", va.suite, "geometry horoball duality subgradient rigidity isometry all")
      ->capture_default_str();
  verify->add_option("--seed", va.seed)->capture_default_str();
  verify->callback([&] { action = [&] { return cmd_verify(va); }; });

  ConjugateArgs ca;
  auto* conj = app.add_subcommand("conjugate", "sup-based conjugate on a grid or point list");
  add_common(conj, ca.c);
  conj->add_option("--fn", ca.fn, "function spec")->required();
  conj->add_option("--p", ca.p, "base point")->required();
  conj->add_option("--points", ca.points, "file with one point literal per line");
  conj->add_option("--grid", ca.grid, "N x N polar grid around p");
  conj->add_option("--radius", ca.radius, "grid radius")->capture_default_str();
  conj->add_option("--budget", ca.budget, "key=value,... search budget overrides");
  conj->callback([&] { action = [&] { return cmd_conjugate(ca); }; });

  NonlinearityArgs na;
  na.c.space = "h2";
  auto* nonl = app.add_subcommand("nonlinearity", "nonlinearity measure along a geodesic");
  add_common(nonl, na.c, false);
  nonl->add_option("--radius", na.radius)->capture_default_str();
  nonl->add_option("--steps", na.steps)->capture_default_str();
  nonl->add_option("--seed", na.seed)->capture_default_str();
  nonl->callback([&] { action = [&] { return cmd_nonlinearity(na); }; });

  CurvatureArgs cu;
  auto* curv = app.add_subcommand("curvature", "sectional, Ricci and zero-Ricci search at a point");
  add_common(curv, cu.c);
  curv->add_option("--point", cu.point, "point literal (origin when omitted)");
  curv->add_option("--seed", cu.seed)->capture_default_str();
  curv->callback([&] { action = [&] { return cmd_curvature(cu); }; });

  LevelsArgs la;
  la.c.space = "h2";
  auto* lev = app.add_subcommand("busemann-levels", "closed-form vs limit Busemann on a polar grid");
  add_common(lev, la.c, false);
  lev->add_option("--ray", la.ray, "POINT:VECTOR")->required();
  lev->add_option("--grid", la.grid)->capture_default_str();
  lev->add_option("--radius", la.radius)->capture_default_str();
  lev->add_option("--budget", la.budget, "key=value,... search budget overrides");
  lev->callback([&] { action = [&] { return cmd_busemann_levels(la); }; });

  SubdiffArgs sa;
  auto* sub = app.add_subcommand("subdiff", "sampled subgradient membership test");
  add_common(sub, sa.c);
  sub->add_option("--fn", sa.fn)->required();
  sub->add_option("--p", sa.p)->required();
  sub->add_option("--x", sa.x)->required();
  sub->add_option("--v", sa.v)->required();
  sub->add_option("--budget", sa.budget, "key=value,... search budget overrides");
  sub->callback([&] { action = [&] { return cmd_subdiff(sa); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action();
  } catch (const ConvergenceFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hadamard_cli");
  for (const auto& s : args) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace hadamard::cli
