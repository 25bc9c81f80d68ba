// Serial reference kernels vs their OpenMP counterparts on the workloads the
// library parallelises: conjugate grids, Fenchel-Young audits and Busemann
// limit grids. Reports wall time, speedup and the largest deviation between
// the two result sets.
//
//   bench_grid [scale]   (scale multiplies the workload sizes, default 1)

#include "hadamard/duality.hpp"
#include "hadamard/grid_kernels.hpp"
#include "hadamard/horoball.hpp"
#include "hadamard/sampling.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

using namespace hadamard;

namespace {

struct Timed {
  std::vector<double> values;
  double ms = 0;
};

Timed timed(const std::function<std::vector<double>()>& run) {
  const auto t0 = std::chrono::steady_clock::now();
  Timed out{run(), 0};
  out.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

double max_dev(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void row(const std::string& name, int items, const Timed& s, const Timed& p) {
  std::printf("%-34s %6d %11.1f %11.1f %8.2f %10.2e\n", name.c_str(), items, s.ms, p.ms,
              s.ms / std::max(p.ms, 1e-9), max_dev(s.values, p.values));
}

std::vector<Point> sample(const Point& o, int n, double radius, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> xs;
  for (int i = 0; i < n; ++i) xs.push_back(random_point_near(o, radius, rng));
  return xs;
}

// Conjugate at each point; the policy selects the cylinder-grid kernel.
Timed conjugate_grid(const FunctionSpec& f, const Point& p, const std::vector<Point>& xs,
                     ExecutionPolicy policy) {
  return timed([&] {
    ConjugateOptions opts;
    opts.policy = policy;
    opts.probe_divergence = false;
    std::vector<double> out;
    for (const Point& x : xs) out.push_back(conjugate(f, p, x, {}, opts).value.value);
    return out;
  });
}

Timed audit(const FunctionSpec& f, const Point& p, int pairs, ExecutionPolicy policy) {
  return timed([&] {
    SearchBudget b;
    b.sample_radius = 3.0;
    const FenchelYoungReport r = fenchel_young_audit(f, p, pairs, 7, b, policy);
    return std::vector<double>{r.min_slack, static_cast<double>(r.violations)};
  });
}

Timed limit_grid(const Ray& ray, const std::vector<Point>& xs, ExecutionPolicy policy) {
  return timed([&] {
    return kernels::evaluate(
        [&](int i) { return busemann_numeric(ray, xs[static_cast<std::size_t>(i)], {}); },
        static_cast<int>(xs.size()), policy);
  });
}

}  // namespace

int main(int argc, char** argv) {
  const int scale = argc > 1 ? std::max(1, std::atoi(argv[1])) : 1;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %6s %11s %11s %8s %10s\n", "workload", "items", "serial_ms", "omp_ms",
              "speedup", "max_dev");

  const auto S = ExecutionPolicy::Serial;
  const auto P = ExecutionPolicy::Parallel;
  for (const SpaceDescriptor& space :
       {SpaceDescriptor::hyperbolic(2), SpaceDescriptor::spd(2),
        SpaceDescriptor::product(SpaceDescriptor::hyperbolic(2), SpaceDescriptor::euclidean(1))}) {
    const Point o = origin(space);
    const std::string tag = space.name();
    const FunctionSpec f = FunctionSpec::radial(HSpec::quadratic(1.0), o);
    const auto xs = sample(o, 8 * scale, 2.0, 1);
    row("conjugate grid " + tag, static_cast<int>(xs.size()), conjugate_grid(f, o, xs, S),
        conjugate_grid(f, o, xs, P));
    row("fenchel-young audit " + tag, 400 * scale, audit(f, o, 400 * scale, S),
        audit(f, o, 400 * scale, P));
    Rng rng(3);
    const Ray ray = make_ray(o, random_unit_tangent(o, rng));
    const auto ys = sample(o, 200 * scale, 2.0, 2);
    row("busemann limit grid " + tag, static_cast<int>(ys.size()), limit_grid(ray, ys, S),
        limit_grid(ray, ys, P));
  }
  return 0;
}
