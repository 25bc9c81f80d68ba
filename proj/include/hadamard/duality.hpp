#pragma once

// Busemann-based Fenchel conjugates
//
//   f*_p(x) = sup { t B^p_v(x) - f(exp_p(-t v)) : t >= 0, |v| = 1 },
//
// the biconjugate, the radial reduction f = h(d(., p)) -> h*(d(., p)), the
// nonlinearity measure N^p and the Fenchel-Young audit.

#include "hadamard/functions.hpp"
#include "hadamard/search.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

namespace hadamard {

enum class ExtStatus { Finite, Diverging, PlusInfinity, MinusInfinity };

std::string to_string(ExtStatus s);

/// Extended real. A diverging value carries the truncated estimate in
/// `value`, the probe estimate in `last_value` and the probe radius.
struct ExtScalar {
  double value = 0;
  ExtStatus status = ExtStatus::Finite;
  double last_value = 0;
  double last_radius = 0;

  static ExtScalar finite(double v);
  static ExtScalar plus_infinity();
  static ExtScalar minus_infinity();
  static ExtScalar diverging(double value, double last_value, double last_radius);

  bool is_finite() const { return status == ExtStatus::Finite; }
};

struct ConjugateWitness {
  double t = 0;
  Tangent v;
  double value = 0;
};

/// 1D conjugate h*(s) = sup_{t >= 0} (s t - h(t)). Closed forms for
/// quadratic, power and linear profiles; golden section on [0, t_max] with a
/// divergence probe at 2 t_max otherwise. Throws std::invalid_argument for
/// s < 0.
ExtScalar legendre_1d(const HSpec& h, double s, const SearchBudget& budget = {});

struct ConjugateOptions {
  bool probe_divergence = true;
  ExecutionPolicy policy = ExecutionPolicy::Parallel;
};

struct ConjugateResult {
  ExtScalar value;
  ConjugateWitness witness;
  double t_max = 0;
};

/// Truncated sup over the cylinder, grid plus simplex refinement. The witness
/// is checked against sup_z {H_p(z, x) - f(z)} at z = exp_p(-t v) within 1e-8
/// (std::logic_error otherwise). The value is diverging when rerunning with
/// 2 t_max gains more than budget.divergence_slack.
ConjugateResult conjugate(const FunctionSpec& f, const Point& p, const Point& x,
                          const SearchBudget& budget, const ConjugateOptions& options = {});

/// Same search for an arbitrary function given as a callable.
ConjugateResult conjugate_of(const std::function<double(const Point&)>& f, const Point& p,
                             const Point& x, const SearchBudget& budget,
                             const ConjugateOptions& options = {});

/// h*(d(x, p)).
ExtScalar radial_conjugate(const HSpec& h, const Point& p, const Point& x,
                           const SearchBudget& budget = {});

struct BiconjugateResult {
  ExtScalar value;
  ConjugateWitness witness;
  double outer_t_max = 0;
  double inner_t_max = 0;
};

/// Conjugate of the map z -> f*_p(z). Inner conjugates are computed lazily on
/// the outer search points and memoised by the exact (t, v) of the node, so
/// repeated calls at different x share the outer grid. The cache is safe for
/// concurrent insertion.
class Biconjugator {
 public:
  Biconjugator(FunctionSpec f, Point p, SearchBudget outer, SearchBudget inner,
               ExecutionPolicy policy = ExecutionPolicy::Parallel);
  ~Biconjugator();
  Biconjugator(const Biconjugator&) = delete;
  Biconjugator& operator=(const Biconjugator&) = delete;

  BiconjugateResult operator()(const Point& x);
  std::size_t cache_size() const;

 private:
  struct Cache;
  double inner_conjugate(const Tangent& v, double t);

  FunctionSpec f_;
  Point p_;
  SearchBudget outer_;
  SearchBudget inner_;
  ExecutionPolicy policy_;
  std::unique_ptr<Cache> cache_;
};

BiconjugateResult biconjugate(const FunctionSpec& f, const Point& p, const Point& x,
                              const SearchBudget& budget,
                              ExecutionPolicy policy = ExecutionPolicy::Parallel);

struct NonlinearityResult {
  double value = 0;  // always <= 0
  Point z;           // minimiser found
};

/// N^p(y) = inf_z {H_p(y, z) - H_p(z, y)} over z = exp_p(s w), s in [0, t_max].
NonlinearityResult nonlinearity(const Point& p, const Point& y, const SearchBudget& budget,
                                ExecutionPolicy policy = ExecutionPolicy::Parallel);

struct FenchelYoungReport {
  int pairs = 0;
  int conjugates = 0;           // distinct y values
  double min_slack = 0;         // min of f(x) + f*_p(y) - H_p(x, y)
  Point x_witness;
  Point y_witness;
  int violations = 0;           // slack below -tol
  double tol = 0;
  bool pass = false;
};

/// Samples n_samples pairs (x, y) around p within budget.sample_radius as an
/// n_y x n_x product (n_y = ceil(sqrt(n_samples))) so each f*_p(y) is
/// computed once. Conjugates are truncated sups, hence lower bounds, so a
/// negative slack is never a truncation artefact.
FenchelYoungReport fenchel_young_audit(const FunctionSpec& f, const Point& p, int n_samples,
                                       std::uint64_t seed, const SearchBudget& budget,
                                       ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace hadamard
