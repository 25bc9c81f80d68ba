#include "helpers.hpp"

#include "hadamard/cli/suites.hpp"
#include "hadamard/duality.hpp"
#include "hadamard/grid_kernels.hpp"
#include "hadamard/rigidity.hpp"
#include "hadamard/subgradient.hpp"

#include <catch_amalgamated.hpp>

#include <omp.h>

#include <stdexcept>

using namespace th;

namespace {

// Oversubscribe so the OpenMP paths interleave even on one core.
struct Threads {
  Threads() { omp_set_num_threads(4); }
} const threads;

}  // namespace

TEST_CASE("kernels: serial and parallel agree bit for bit") {
  Rng rng(81);
  const Point o = origin(h2());
  std::vector<Point> pts;
  for (int i = 0; i < 500; ++i) pts.push_back(random_point_near(o, 3.0, rng));
  const Ray r = make_ray(o, tangent_basis(o)[1]);
  const kernels::IndexedFn fn = [&](int i) { return busemann(r, pts[static_cast<std::size_t>(i)]); };
  const auto a = kernels::evaluate_serial(fn, 500);
  const auto b = kernels::evaluate_parallel(fn, 500);
  CHECK(a == b);
  CHECK(kernels::argmin(a) == kernels::argmin(b));
  CHECK(kernels::evaluate_parallel(fn, 0).empty());
  CHECK(kernels::argmin({3.0, 1.0, 1.0, 2.0}) == 1);
}

TEST_CASE("kernels: the first worker exception is rethrown") {
  const kernels::IndexedFn bad = [](int i) -> double {
    if (i == 37) throw std::domain_error("boom");
    return i;
  };
  CHECK_THROWS_AS(kernels::evaluate_parallel(bad, 100), std::domain_error);
  CHECK_THROWS_AS(kernels::evaluate_serial(bad, 100), std::domain_error);
}

TEST_CASE("conjugate and biconjugate do not depend on the schedule") {
  SearchBudget b;
  b.sphere_samples = 32;
  b.t_samples = 32;
  Rng rng(82);
  for (const auto& sp : all_spaces()) {
    INFO(sp.name());
    const Point p = origin(sp);
    const Ray r = make_ray(p, random_unit_tangent(p, rng));
    const Point x = random_point_near(p, 2.0, rng);
    for (const FunctionSpec& f : {FunctionSpec::half_dist_sq(p), FunctionSpec::busemann(r)}) {
      const ConjugateResult s = conjugate(f, p, x, b, {true, ExecutionPolicy::Serial});
      const ConjugateResult q = conjugate(f, p, x, b, {true, ExecutionPolicy::Parallel});
      CHECK(s.value.value == q.value.value);
      CHECK(s.value.status == q.value.status);
      CHECK(s.witness.t == q.witness.t);
      CHECK(s.witness.v.vec == q.witness.v.vec);
    }
  }
  SearchBudget outer;
  outer.sphere_samples = 12;
  outer.t_samples = 8;
  outer.refine_iters = 40;
  SearchBudget inner = outer;
  inner.t_max = 6;
  const Point o = origin(h2());
  const FunctionSpec f = FunctionSpec::busemann(make_ray(o, tangent_basis(o)[0]));
  Biconjugator bs(f, o, outer, inner, ExecutionPolicy::Serial);
  Biconjugator bp(f, o, outer, inner, ExecutionPolicy::Parallel);
  for (double d : {0.0, 0.7, 1.4}) {
    const Point x = h2_at(d);
    CHECK(bs(x).value.value == bp(x).value.value);
  }
  CHECK(bs.cache_size() == bp.cache_size());
}

TEST_CASE("audits and probes do not depend on the schedule") {
  SearchBudget b;
  b.sphere_samples = 24;
  b.t_samples = 24;
  b.sample_radius = 3.0;
  b.n_samples = 300;
  const Point o = origin(h2());
  const FunctionSpec f = FunctionSpec::radial(HSpec::quadratic(1), o);
  const FenchelYoungReport s = fenchel_young_audit(f, o, 200, 3, b, ExecutionPolicy::Serial);
  const FenchelYoungReport q = fenchel_young_audit(f, o, 200, 3, b, ExecutionPolicy::Parallel);
  CHECK(s.min_slack == q.min_slack);
  CHECK(s.x_witness.coords == q.x_witness.coords);
  CHECK(s.y_witness.coords == q.y_witness.coords);

  const Point x = h2_at(1.0);
  const Tangent g = 2.0 * radial_subgradient(HSpec::quadratic(1), o, x);
  const SubgradientReport ss = is_subgradient(f, o, x, g, b, ExecutionPolicy::Serial);
  const SubgradientReport sq = is_subgradient(f, o, x, g, b, ExecutionPolicy::Parallel);
  CHECK(ss.min_slack == sq.min_slack);
  CHECK(ss.min_z.coords == sq.min_z.coords);

  const auto m = SpaceDescriptor::spd(2);
  const AffinityReport as = affinity_report(FunctionSpec::logdet(m), m, 50, 4, ExecutionPolicy::Serial);
  const AffinityReport ap = affinity_report(FunctionSpec::logdet(m), m, 50, 4, ExecutionPolicy::Parallel);
  CHECK(as.max_second_difference == ap.max_second_difference);
  CHECK(as.gradient_norm_mean == ap.gradient_norm_mean);

  const GramProbe gs = gram_probe(h2(), o, x, 100, 5, false, ExecutionPolicy::Serial);
  const GramProbe gp = gram_probe(h2(), o, x, 100, 5, false, ExecutionPolicy::Parallel);
  CHECK(gs.min_second_difference == gp.min_second_difference);
  CHECK(gs.witness_t == gp.witness_t);

  const ZeroRicciResult zs = zero_ricci_direction(origin(m), SearchBudget{}, ExecutionPolicy::Serial);
  const ZeroRicciResult zp = zero_ricci_direction(origin(m), SearchBudget{}, ExecutionPolicy::Parallel);
  CHECK(zs.min_abs_ricci == zp.min_abs_ricci);
  CHECK(nonlinearity(o, x, b, ExecutionPolicy::Serial).value == nonlinearity(o, x, b, ExecutionPolicy::Parallel).value);
}

TEST_CASE("verify suites do not depend on the schedule") {
  for (const char* label : {"e2", "h2"}) {
    const SpaceDescriptor sp = std::string(label) == "e2" ? SpaceDescriptor::euclidean(2) : h2();
    const auto s = hadamard::cli::run_suite("all", sp, label, 42, ExecutionPolicy::Serial);
    const auto p = hadamard::cli::run_suite("all", sp, label, 42, ExecutionPolicy::Parallel);
    CHECK(s == p);
    CHECK(s.all_passed());
  }
}
