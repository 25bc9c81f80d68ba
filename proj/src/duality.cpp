#include "hadamard/duality.hpp"

#include "hadamard/errors.hpp"
#include "hadamard/sampling.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace hadamard {

std::string to_string(ExtStatus s) {
  switch (s) {
    case ExtStatus::Finite: return "finite";
    case ExtStatus::Diverging: return "diverging";
    case ExtStatus::PlusInfinity: return "plus_infinity";
    case ExtStatus::MinusInfinity: return "minus_infinity";
  }
  return "unknown";
}

ExtScalar ExtScalar::finite(double v) { return {v, ExtStatus::Finite, v, 0}; }

ExtScalar ExtScalar::plus_infinity() {
  const double inf = std::numeric_limits<double>::infinity();
  return {inf, ExtStatus::PlusInfinity, inf, 0};
}

ExtScalar ExtScalar::minus_infinity() {
  const double inf = std::numeric_limits<double>::infinity();
  return {-inf, ExtStatus::MinusInfinity, -inf, 0};
}

ExtScalar ExtScalar::diverging(double value, double last_value, double last_radius) {
  return {value, ExtStatus::Diverging, last_value, last_radius};
}

ExtScalar legendre_1d(const HSpec& h, double s, const SearchBudget& budget) {
  if (!(s >= 0)) throw std::invalid_argument("legendre_1d: s must be nonnegative");
  switch (h.kind) {
    case HKind::Quadratic:
      return ExtScalar::finite(s * s / (2.0 * h.param));
    case HKind::Linear:
      return s <= h.param ? ExtScalar::finite(0.0) : ExtScalar::plus_infinity();
    case HKind::Power: {
      if (h.param == 1.0) return s <= 1.0 ? ExtScalar::finite(0.0) : ExtScalar::plus_infinity();
      const double qc = h.param / (h.param - 1.0);
      return ExtScalar::finite(std::pow(s, qc) / qc);
    }
    case HKind::Expm1:
      break;
  }
  budget.validate();
  auto sup_on = [&](double radius) {
    const GoldenResult g =
        golden_section([&](double t) { return h.value(t) - s * t; }, 0.0, radius, 1e-10);
    return -g.min;
  };
  const double v1 = sup_on(budget.t_max);
  const double v2 = sup_on(2.0 * budget.t_max);
  if (v2 > v1 + budget.divergence_slack) {
    return ExtScalar::diverging(v1, v2, 2.0 * budget.t_max);
  }
  return ExtScalar::finite(v1);
}

namespace {

CylinderResult search_conjugate(const std::function<double(const Point&)>& f, const Point& p,
                                const Point& x, const SearchBudget& budget,
                                ExecutionPolicy policy) {
  const CylinderObjective obj = [&](const Tangent& v, double t) {
    const double fz = f(exp(p, -t * v));
    if (t == 0) return -fz;
    return t * busemann(Ray{p, v}, x) - fz;
  };
  return maximize_cylinder(obj, p, budget, policy);
}

}  // namespace

ConjugateResult conjugate_of(const std::function<double(const Point&)>& f, const Point& p,
                             const Point& x, const SearchBudget& budget,
                             const ConjugateOptions& options) {
  budget.validate();
  require_same_space(p.space, x.space, "conjugate");
  const CylinderResult best = search_conjugate(f, p, x, budget, options.policy);

  ConjugateResult out;
  out.t_max = budget.t_max;
  out.witness = ConjugateWitness{best.t, best.v, best.value};
  if (best.value == -std::numeric_limits<double>::infinity()) {
    out.value = ExtScalar::minus_infinity();
    return out;
  }

  const Point z = exp(p, -best.t * best.v);
  const double via_kernel = h_kernel(p, z, x) - f(z);
  if (!(std::abs(via_kernel - best.value) <= 1e-8 * std::max(1.0, std::abs(best.value)))) {
    throw std::logic_error("conjugate: witness disagrees with sup_z {H_p(z,x) - f(z)}: " +
                           std::to_string(via_kernel) + " vs " + std::to_string(best.value));
  }

  out.value = ExtScalar::finite(best.value);
  if (options.probe_divergence) {
    SearchBudget wide = budget;
    wide.t_max = 2.0 * budget.t_max;
    const CylinderResult probe = search_conjugate(f, p, x, wide, options.policy);
    const double last = std::max(probe.value, best.value);
    if (last > best.value + budget.divergence_slack) {
      out.value = ExtScalar::diverging(best.value, last, wide.t_max);
    }
  }
  return out;
}

ConjugateResult conjugate(const FunctionSpec& f, const Point& p, const Point& x,
                          const SearchBudget& budget, const ConjugateOptions& options) {
  require_same_space(f.space, p.space, "conjugate");
  return conjugate_of([&](const Point& z) { return eval(f, z); }, p, x, budget, options);
}

ExtScalar radial_conjugate(const HSpec& h, const Point& p, const Point& x,
                           const SearchBudget& budget) {
  return legendre_1d(h, dist(x, p), budget);
}

// --- biconjugate -----------------------------------------------------------

struct Biconjugator::Cache {
  std::mutex mutex;
  std::unordered_map<std::string, double> values;
};

Biconjugator::Biconjugator(FunctionSpec f, Point p, SearchBudget outer, SearchBudget inner,
                           ExecutionPolicy policy)
    : f_(std::move(f)),
      p_(std::move(p)),
      outer_(outer),
      inner_(inner),
      policy_(policy),
      cache_(std::make_unique<Cache>()) {
  outer_.validate();
  inner_.validate();
  require_same_space(f_.space, p_.space, "Biconjugator");
}

Biconjugator::~Biconjugator() = default;

std::size_t Biconjugator::cache_size() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return cache_->values.size();
}

double Biconjugator::inner_conjugate(const Tangent& v, double t) {
  std::string key(sizeof(double) * (1 + static_cast<std::size_t>(v.vec.size())), '\0');
  std::memcpy(key.data(), &t, sizeof(double));
  std::memcpy(key.data() + sizeof(double), v.vec.data(), sizeof(double) * v.vec.size());
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    const auto it = cache_->values.find(key);
    if (it != cache_->values.end()) return it->second;
  }
  const Point z = exp(p_, -t * v);
  const ConjugateOptions serial{false, ExecutionPolicy::Serial};
  const double value = conjugate(f_, p_, z, inner_, serial).value.value;
  std::lock_guard<std::mutex> lock(cache_->mutex);
  cache_->values.emplace(std::move(key), value);
  return value;
}

BiconjugateResult Biconjugator::operator()(const Point& x) {
  require_same_space(p_.space, x.space, "biconjugate");
  const CylinderObjective obj = [&](const Tangent& v, double t) {
    const double fz = inner_conjugate(v, t);
    if (t == 0) return -fz;
    return t * busemann(Ray{p_, v}, x) - fz;
  };
  const CylinderResult best = maximize_cylinder(obj, p_, outer_, policy_);
  BiconjugateResult out;
  out.outer_t_max = outer_.t_max;
  out.inner_t_max = inner_.t_max;
  out.witness = ConjugateWitness{best.t, best.v, best.value};
  out.value = best.value == -std::numeric_limits<double>::infinity()
                  ? ExtScalar::minus_infinity()
                  : ExtScalar::finite(best.value);
  return out;
}

BiconjugateResult biconjugate(const FunctionSpec& f, const Point& p, const Point& x,
                              const SearchBudget& budget, ExecutionPolicy policy) {
  Biconjugator b(f, p, budget, budget, policy);
  return b(x);
}

// --- nonlinearity ----------------------------------------------------------

NonlinearityResult nonlinearity(const Point& p, const Point& y, const SearchBudget& budget,
                                ExecutionPolicy policy) {
  budget.validate();
  require_same_space(p.space, y.space, "nonlinearity");
  const CylinderObjective obj = [&](const Tangent& w, double s) {
    const Point z = exp(p, s * w);
    return h_kernel(p, z, y) - h_kernel(p, y, z);
  };
  const CylinderResult best = maximize_cylinder(obj, p, budget, policy);
  return {-best.value, exp(p, best.t * best.v)};
}

// --- Fenchel-Young audit ---------------------------------------------------

FenchelYoungReport fenchel_young_audit(const FunctionSpec& f, const Point& p, int n_samples,
                                       std::uint64_t seed, const SearchBudget& budget,
                                       ExecutionPolicy policy) {
  if (n_samples <= 0) throw std::invalid_argument("fenchel_young_audit: n_samples must be positive");
  budget.validate();
  const int ny = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_samples))));
  const int nx = (n_samples + ny - 1) / ny;

  Rng rng(seed);
  std::vector<Point> ys;
  std::vector<Point> xs;
  for (int i = 0; i < ny; ++i) ys.push_back(random_point_near(p, budget.sample_radius, rng));
  for (int i = 0; i < nx; ++i) xs.push_back(random_point_near(p, budget.sample_radius, rng));

  FenchelYoungReport report;
  report.tol = budget.tol;
  std::vector<double> conj(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    conj[i] = conjugate(f, p, ys[i], budget, {false, policy}).value.value;
  }
  report.conjugates = ny;

  std::vector<double> fx(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) fx[j] = eval(f, xs[j]);

  const std::vector<double> slack = kernels::evaluate(
      [&](int i) {
        const auto yi = static_cast<std::size_t>(i / nx);
        const auto xj = static_cast<std::size_t>(i % nx);
        return fx[xj] + conj[yi] - h_kernel(p, xs[xj], ys[yi]);
      },
      n_samples, policy);

  const int worst = kernels::argmin(slack);
  report.pairs = n_samples;
  report.min_slack = slack[static_cast<std::size_t>(worst)];
  report.y_witness = ys[static_cast<std::size_t>(worst / nx)];
  report.x_witness = xs[static_cast<std::size_t>(worst % nx)];
  for (double s : slack) {
    if (s < -budget.tol) ++report.violations;
  }
  report.pass = report.violations == 0;
  return report;
}

}  // namespace hadamard
