#include "hadamard/rigidity.hpp"

#include "hadamard/errors.hpp"
#include "hadamard/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace hadamard {

namespace {

constexpr double kStep = 0.25;
constexpr double kSpan = 2.0;
constexpr int kStations = 17;  // t = -2, -1.75, ..., 2

struct Geodesic {
  Point base;
  Tangent dir;
};

std::vector<Geodesic> seeded_geodesics(const Point& center, int n, std::uint64_t seed,
                                       bool through_center) {
  Rng rng(seed);
  std::vector<Geodesic> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Point base = through_center ? center : random_point_near(center, kSpan, rng);
    out.push_back({base, random_unit_tangent(base, rng)});
  }
  return out;
}

double station(int j) { return -kSpan + kStep * j; }

struct Extremes {
  double min_value;
  int min_index;
  double max_abs;
  int max_index;
};

// Per geodesic: values of fn at the stations and at +-h beyond the ends.
template <class Fn>
Extremes scan(const std::vector<Geodesic>& geos, Fn&& fn, ExecutionPolicy policy) {
  const int count = static_cast<int>(geos.size()) * kStations;
  const std::vector<double> sd = kernels::evaluate(
      [&](int i) {
        const Geodesic& g = geos[static_cast<std::size_t>(i / kStations)];
        return fn(g, station(i % kStations));
      },
      count, policy);
  Extremes e{0, 0, 0, 0};
  for (int i = 0; i < count; ++i) {
    const double v = sd[static_cast<std::size_t>(i)];
    if (i == 0 || v < e.min_value) {
      e.min_value = v;
      e.min_index = i;
    }
    if (i == 0 || std::abs(v) > e.max_abs) {
      e.max_abs = std::abs(v);
      e.max_index = i;
    }
  }
  return e;
}

}  // namespace

double second_difference(const FunctionSpec& f, const Point& base, const Tangent& dir, double t,
                         double h) {
  const double up = eval(f, exp(base, (t + h) * dir));
  const double mid = eval(f, exp(base, t * dir));
  const double down = eval(f, exp(base, (t - h) * dir));
  return up - 2.0 * mid + down;
}

AffinityReport affinity_report(const FunctionSpec& f, const SpaceDescriptor& space,
                               int n_geodesics, std::uint64_t seed, ExecutionPolicy policy) {
  if (n_geodesics <= 0) throw std::invalid_argument("affinity_report: n_geodesics must be positive");
  require_same_space(f.space, space, "affinity_report");
  const auto geos = seeded_geodesics(origin(space), n_geodesics, seed, false);
  const Extremes e = scan(
      geos,
      [&](const Geodesic& g, double t) { return second_difference(f, g.base, g.dir, t, kStep); },
      policy);

  const std::vector<double> norms = kernels::evaluate(
      [&](int i) {
        const Point& b = geos[static_cast<std::size_t>(i)].base;
        return norm(fd_gradient([&](const Point& y) { return eval(f, y); }, b, 1e-3));
      },
      n_geodesics, policy);
  double mean = 0;
  for (double n : norms) mean += n;
  mean /= n_geodesics;
  double var = 0;
  for (double n : norms) var += (n - mean) * (n - mean);

  AffinityReport r;
  r.geodesics = n_geodesics;
  r.max_second_difference = e.max_abs;
  r.gradient_norm_mean = mean;
  r.gradient_norm_stddev = std::sqrt(var / n_geodesics);
  const Geodesic& w = geos[static_cast<std::size_t>(e.max_index / kStations)];
  r.witness_base = w.base;
  r.witness_dir = w.dir;
  r.witness_t = station(e.max_index % kStations);
  r.affine = r.max_second_difference <= 1e-6;
  return r;
}

ZeroRicciResult zero_ricci_direction(const Point& p, const SearchBudget& budget,
                                     ExecutionPolicy policy) {
  budget.validate();
  if (p.space.dim() < 2) throw std::invalid_argument("zero_ricci_direction: dim must be >= 2");
  const SphereResult r = minimize_sphere(
      [&](const Tangent& v) { return std::abs(ricci_dir(p, v)); }, p, budget, policy);
  return {r.value, r.v};
}

double splitting_check_spd(const Point& x, const Point& y) {
  require_same_space(x.space, y.space, "splitting_check_spd");
  if (x.space.kind() != SpaceKind::SPD) throw SpaceMismatch("splitting_check_spd on " + x.space.name());
  const int n = x.space.order();
  const FunctionSpec logdet = FunctionSpec::logdet(x.space);
  auto split = [&](const Point& z, double& s) {
    const double ld = eval(logdet, z);
    s = ld / std::sqrt(static_cast<double>(n));
    return Point{z.space, z.coords * std::exp(-ld / n)};
  };
  double sx = 0;
  double sy = 0;
  const Point xt = split(x, sx);
  const Point yt = split(y, sy);
  const double d = dist(x, y);
  const double dt = dist(xt, yt);
  return std::abs(d * d - dt * dt - (sx - sy) * (sx - sy));
}

GramProbe gram_probe(const SpaceDescriptor& space, const Point& z, const Point& x,
                     int n_geodesics, std::uint64_t seed, bool through_z,
                     ExecutionPolicy policy) {
  if (n_geodesics <= 0) throw std::invalid_argument("gram_probe: n_geodesics must be positive");
  require_same_space(space, z.space, "gram_probe");
  if (dist(z, x) < 1e-12) throw std::invalid_argument("gram_probe: z = x");
  const FunctionSpec g = FunctionSpec::gram(z, x);
  const auto geos = seeded_geodesics(z, n_geodesics, seed, through_z);
  const Extremes e = scan(
      geos,
      [&](const Geodesic& geo, double t) {
        return second_difference(g, geo.base, geo.dir, t, kStep);
      },
      policy);
  GramProbe r;
  r.geodesics = n_geodesics;
  r.min_second_difference = e.min_value;
  r.max_abs_second_difference = e.max_abs;
  const Geodesic& w = geos[static_cast<std::size_t>(e.min_index / kStations)];
  r.witness_base = w.base;
  r.witness_dir = w.dir;
  r.witness_t = station(e.min_index % kStations);
  r.nonconvex = r.min_second_difference < -1e-3;
  r.linear = r.max_abs_second_difference <= 1e-10;
  return r;
}

}  // namespace hadamard
