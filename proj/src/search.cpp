#include "hadamard/search.hpp"

#include "hadamard/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace hadamard {

void SearchBudget::validate() const {
  if (!(t_max > 0) || sphere_samples < 1 || t_samples < 2 || refine_iters < 0 || !(tol > 0) ||
      !(divergence_slack > 0) || !(sample_radius > 0) || n_samples < 1 || max_doublings < 1) {
    throw std::invalid_argument("invalid search budget");
  }
}

GoldenResult golden_section(const std::function<double(double)>& g, double lo, double hi,
                            double tol) {
  if (!(lo < hi)) throw std::invalid_argument("golden_section: need lo < hi");
  auto checked = [&](double t) {
    const double v = g(t);
    if (std::isnan(v)) throw std::domain_error("golden_section: objective returned NaN");
    return v;
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = checked(c), fd = checked(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = checked(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = checked(d);
    }
  }
  GoldenResult best{0.5 * (a + b), checked(0.5 * (a + b))};
  const double flo = checked(lo);
  const double fhi = checked(hi);
  if (flo <= best.min) best = {lo, flo};
  if (fhi < best.min) best = {hi, fhi};
  return best;
}

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const Eigen::VectorXd& steps,
                             int max_iters) {
  const Eigen::Index n = x0.size();
  auto checked = [&](const Eigen::VectorXd& x) {
    const double v = f(x);
    if (std::isnan(v)) throw std::domain_error("nelder_mead: objective returned NaN");
    return v;
  };
  std::vector<Eigen::VectorXd> simplex(static_cast<std::size_t>(n + 1), x0);
  std::vector<double> values(static_cast<std::size_t>(n + 1));
  for (Eigen::Index i = 0; i < n; ++i) simplex[static_cast<std::size_t>(i + 1)](i) += steps(i);
  for (std::size_t i = 0; i < simplex.size(); ++i) values[i] = checked(simplex[i]);

  std::vector<std::size_t> order(simplex.size());
  int iter = 0;
  for (; iter < max_iters; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];

    double diameter = 0;
    for (const auto& x : simplex) diameter = std::max(diameter, (x - simplex[best]).cwiseAbs().maxCoeff());
    const double spread = values[worst] - values[best];
    if (diameter < 1e-13 ||
        (std::isfinite(spread) && spread <= 1e-15 * (1.0 + std::abs(values[best])) && diameter < 1e-9)) {
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i != worst) centroid += simplex[i];
    }
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd reflected = centroid + (centroid - simplex[worst]);
    const double fr = checked(reflected);
    if (fr < values[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - simplex[worst]);
      const double fe = checked(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    const Eigen::VectorXd contracted = outside ? Eigen::VectorXd(centroid + 0.5 * (reflected - centroid))
                                               : Eigen::VectorXd(centroid + 0.5 * (simplex[worst] - centroid));
    const double fc = checked(contracted);
    if (fc < std::min(fr, values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
      values[i] = checked(simplex[i]);
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  const std::size_t best = static_cast<std::size_t>(it - values.begin());
  return {simplex[best], values[best], iter};
}

std::vector<Eigen::VectorXd> sphere_directions(int dim, int count, std::uint64_t seed) {
  std::vector<Eigen::VectorXd> dirs;
  if (dim == 1) {
    dirs.push_back(Eigen::VectorXd::Constant(1, 1.0));
    dirs.push_back(Eigen::VectorXd::Constant(1, -1.0));
    return dirs;
  }
  dirs.reserve(static_cast<std::size_t>(count));
  if (dim == 2) {
    for (int i = 0; i < count; ++i) {
      const double a = 2.0 * std::numbers::pi * i / count;
      Eigen::VectorXd v(2);
      v << std::cos(a), std::sin(a);
      dirs.push_back(v);
    }
  } else if (dim == 3) {
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - (2.0 * i + 1.0) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden_angle * i;
      Eigen::VectorXd v(3);
      v << r * std::cos(phi), r * std::sin(phi), z;
      dirs.push_back(v);
    }
  } else {
    Rng rng(seed);
    for (int i = 0; i < count; ++i) dirs.push_back(unit_vector(rng, dim));
  }
  return dirs;
}

namespace {

// Orthonormal complement of a unit vector c0 in R^dim.
std::vector<Eigen::VectorXd> complement(const Eigen::VectorXd& c0) {
  const Eigen::Index dim = c0.size();
  std::vector<Eigen::VectorXd> out;
  for (Eigen::Index i = 0; i < dim && static_cast<Eigen::Index>(out.size()) < dim - 1; ++i) {
    Eigen::VectorXd w = Eigen::VectorXd::Unit(dim, i);
    w -= w.dot(c0) * c0;
    for (const auto& q : out) w -= w.dot(q) * q;
    const double nw = w.norm();
    if (nw > 1e-6) out.push_back(w / nw);
  }
  return out;
}

// Local chart of the unit sphere around c0: angle chart in 2D, gnomonic above.
struct SphereChart {
  Eigen::VectorXd c0;
  std::vector<Eigen::VectorXd> e;

  explicit SphereChart(const Eigen::VectorXd& center) : c0(center), e(complement(center)) {}

  Eigen::VectorXd operator()(const Eigen::VectorXd& a) const {
    if (e.empty()) return c0;
    if (e.size() == 1) return std::cos(a(0)) * c0 + std::sin(a(0)) * e[0];
    Eigen::VectorXd c = c0;
    for (std::size_t i = 0; i < e.size(); ++i) c += a(static_cast<Eigen::Index>(i)) * e[i];
    return c / c.norm();
  }
};

double angular_step(int dim, int samples) {
  if (dim <= 1) return 0.0;
  if (dim == 2) return 2.0 * std::numbers::pi / samples;
  return 2.0 * std::pow(static_cast<double>(samples), -1.0 / (dim - 1));
}

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

struct Candidate {
  double value;
  double t;
  Eigen::VectorXd coeffs;
};

// Larger value wins; ties go to smaller t, then lexicographic coefficients.
bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.t != b.t) return a.t < b.t;
  return lex_less(a.coeffs, b.coeffs);
}

}  // namespace

CylinderResult maximize_cylinder(const CylinderObjective& obj, const Point& p,
                                 const SearchBudget& budget, ExecutionPolicy policy) {
  budget.validate();
  const int dim = p.space.dim();
  const auto basis = tangent_basis(p);
  const auto dirs = sphere_directions(dim, budget.sphere_samples, budget.seed);
  const int nd = static_cast<int>(dirs.size());
  const int nt = budget.t_samples;
  const double dt = budget.t_max / (nt - 1);

  std::vector<Tangent> dir_tangents;
  dir_tangents.reserve(dirs.size());
  for (const auto& c : dirs) dir_tangents.push_back(from_coefficients(p, basis, c));

  auto checked = [&](const Tangent& v, double t) {
    const double val = obj(v, t);
    if (std::isnan(val)) throw std::domain_error("maximize_cylinder: objective returned NaN");
    return val;
  };

  const std::vector<double> grid = kernels::evaluate(
      [&](int i) {
        const int d = i / nt;
        const int j = i % nt;
        return checked(dir_tangents[static_cast<std::size_t>(d)], j == nt - 1 ? budget.t_max : j * dt);
      },
      nd * nt, policy);

  auto cell = [&](int i) {
    const int j = i % nt;
    return Candidate{grid[static_cast<std::size_t>(i)], j == nt - 1 ? budget.t_max : j * dt,
                     dirs[static_cast<std::size_t>(i / nt)]};
  };

  int best_index = 0;
  for (int i = 1; i < nd * nt; ++i) {
    if (better(cell(i), cell(best_index))) best_index = i;
  }
  Candidate best = cell(best_index);

  CylinderResult result;
  result.grid_value = best.value;
  if (best.value == -std::numeric_limits<double>::infinity()) {
    result.value = best.value;
    result.t = best.t;
    result.v = from_coefficients(p, basis, best.coeffs);
    return result;
  }

  const double astep = angular_step(dim, budget.sphere_samples);

  // At t = 0 the direction is arbitrary; anchor the refinement on the best
  // cell of the first positive-t columns instead.
  Candidate anchor = best;
  if (best.t == 0.0) {
    int pos_index = -1;
    for (int i = 0; i < nd * nt; ++i) {
      if (i % nt == 0 || !std::isfinite(grid[static_cast<std::size_t>(i)])) continue;
      if (pos_index < 0 || better(cell(i), cell(pos_index))) pos_index = i;
    }
    if (pos_index >= 0) anchor = cell(pos_index);
  }

  // Seed for the restart: best finite cell outside the neighbourhood of the anchor.
  int second_index = -1;
  for (int i = 0; i < nd * nt; ++i) {
    const Candidate c = cell(i);
    if (!std::isfinite(c.value)) continue;
    const double cosang = std::clamp(c.coeffs.dot(anchor.coeffs), -1.0, 1.0);
    const bool far = std::acos(cosang) > 2.5 * astep || std::abs(c.t - anchor.t) > 2.5 * dt;
    if (!far) continue;
    if (second_index < 0 || better(c, cell(second_index))) second_index = i;
  }

  auto refine = [&](const Candidate& seed, double scale) {
    const SphereChart chart(seed.coeffs);
    const int na = static_cast<int>(chart.e.size());
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(na + 1);
    x0(na) = seed.t;
    Eigen::VectorXd steps = Eigen::VectorXd::Constant(na + 1, 0.5 * astep * scale);
    steps(na) = seed.t + scale * dt <= budget.t_max ? scale * dt : -scale * dt;
    auto clamp_t = [&](double t) { return std::clamp(t, 0.0, budget.t_max); };
    auto fn = [&](const Eigen::VectorXd& x) {
      const Eigen::VectorXd c = chart(x.head(na));
      const double val = checked(from_coefficients(p, basis, c), clamp_t(x(na)));
      return -val;
    };
    const NelderMeadResult nm = nelder_mead(fn, x0, steps, budget.refine_iters);
    return Candidate{-nm.value, clamp_t(nm.x(na)), chart(nm.x.head(na))};
  };

  if (budget.refine_iters > 0) {
    const Candidate first = refine(anchor, 1.0);
    if (first.value > best.value) best = first;
    if (second_index >= 0) {
      const Candidate second = refine(cell(second_index), 1.0);
      if (second.value > best.value) best = second;
    }
    // A restart from the winner with a smaller simplex polishes stalled runs.
    const Candidate polished = refine(best, 0.1);
    if (polished.value > best.value) best = polished;
  }

  result.value = best.value;
  result.t = best.t;
  result.v = from_coefficients(p, basis, best.coeffs);
  return result;
}

SphereResult minimize_sphere(const SphereObjective& obj, const Point& p, const SearchBudget& budget,
                             ExecutionPolicy policy) {
  budget.validate();
  const int dim = p.space.dim();
  const auto basis = tangent_basis(p);
  const auto dirs = sphere_directions(dim, budget.sphere_samples, budget.seed);
  auto checked = [&](const Eigen::VectorXd& c) {
    const double val = obj(from_coefficients(p, basis, c));
    if (std::isnan(val)) throw std::domain_error("minimize_sphere: objective returned NaN");
    return val;
  };
  const std::vector<double> grid = kernels::evaluate(
      [&](int i) { return checked(dirs[static_cast<std::size_t>(i)]); }, static_cast<int>(dirs.size()),
      policy);
  const int best_index = kernels::argmin(grid);
  Eigen::VectorXd best_c = dirs[static_cast<std::size_t>(best_index)];
  double best_value = grid[static_cast<std::size_t>(best_index)];

  const SphereChart chart(best_c);
  const int na = static_cast<int>(chart.e.size());
  if (na > 0 && budget.refine_iters > 0) {
    const Eigen::VectorXd steps = Eigen::VectorXd::Constant(na, 0.5 * angular_step(dim, budget.sphere_samples));
    const NelderMeadResult nm = nelder_mead([&](const Eigen::VectorXd& a) { return checked(chart(a)); },
                                            Eigen::VectorXd::Zero(na), steps, budget.refine_iters);
    if (nm.value < best_value) {
      best_value = nm.value;
      best_c = chart(nm.x);
    }
  }
  return {best_value, from_coefficients(p, basis, best_c)};
}

Tangent fd_gradient(const std::function<double(const Point&)>& g, const Point& p, double h) {
  const auto basis = tangent_basis(p);
  Tangent grad = zero_tangent(p);
  for (const Tangent& e : basis) {
    const double plus = g(exp(p, h * e));
    const double minus = g(exp(p, -h * e));
    grad = grad + ((plus - minus) / (2.0 * h)) * e;
  }
  return grad;
}

}  // namespace hadamard
