#include "helpers.hpp"
#include "oracles.hpp"

#include "hadamard/errors.hpp"
#include "hadamard/horoball.hpp"

#include <catch_amalgamated.hpp>

using namespace th;
using Catch::Matchers::WithinAbs;

TEST_CASE("make_ray examples") {
  const auto r2 = SpaceDescriptor::euclidean(2);
  CHECK((make_ray(origin(r2), tv(origin(r2), {2, 0})).dir.vec - Eigen::Vector2d(1, 0)).norm() == 0);
  const Point o = origin(h2());
  CHECK((make_ray(o, tv(o, {3, 0, 0})).dir.vec - Eigen::Vector3d(1, 0, 0)).norm() < 1e-15);
  const auto m = SpaceDescriptor::spd(2);
  const Point i2 = spd(m, diag({1, 1}));
  const Ray r = make_ray(i2, spd_tangent(i2, diag({2, 2})));
  CHECK((as_matrix(r.dir.vec, 2) - diag({1, 1}) / std::sqrt(2.0)).norm() < 1e-15);
  CHECK_THROWS_AS(make_ray(o, zero_tangent(o)), std::invalid_argument);
}

TEST_CASE("busemann examples") {
  const Point o = origin(h2());
  const Ray r = make_ray(o, tv(o, {1, 0, 0}));
  const Point x = pt(h2(), {0, std::sinh(1.0), std::cosh(1.0)});
  CHECK_THAT(busemann(r, x), WithinAbs(std::log(std::cosh(1.0)), 1e-14));
  CHECK_THAT(busemann(r, x), WithinAbs(0.4338, 1e-4));
  const auto r2 = SpaceDescriptor::euclidean(2);
  CHECK(busemann(make_ray(origin(r2), tv(origin(r2), {1, 0})), pt(r2, {3, 4})) == -3.0);
  for (const auto& sp : all_spaces()) {
    Rng rng(1);
    const Point p = random_point_near(origin(sp), 1.0, rng);
    CHECK_THAT(busemann(make_ray(p, random_unit_tangent(p, rng)), p), WithinAbs(0, 1e-14));
  }
}

TEST_CASE("busemann_numeric examples") {
  const Point o = origin(h2());
  const Ray r = make_ray(o, tv(o, {1, 0, 0}));
  SearchBudget b;
  b.t_max = 20;
  b.tol = 1e-6;
  const Point x = pt(h2(), {0, std::sinh(1.0), std::cosh(1.0)});
  CHECK_THAT(busemann_numeric(r, x, b), WithinAbs(std::log(std::cosh(1.0)), 1e-6));
  CHECK_THAT(busemann_numeric(r, ray_point(r, 2.0), b), WithinAbs(-2.0, 1e-6));
  const auto m = SpaceDescriptor::spd(2);
  const Point i2 = spd(m, diag({1, 1}));
  const Ray rs = make_ray(i2, spd_tangent(i2, diag({1, 0})));
  CHECK_THAT(busemann_numeric(rs, i2, b), WithinAbs(0.0, 1e-6));
  SearchBudget tight;
  tight.tol = 1e-300;
  tight.max_doublings = 2;
  CHECK_THROWS_AS(busemann_numeric_limit(r, x, tight), ConvergenceFailure);
}

TEST_CASE("hyperbolic busemann matches the ambient formula") {
  Rng rng(3);
  for (double k : {0.5, 1.0, 2.0}) {
    const auto s = SpaceDescriptor::hyperbolic(3, k);
    for (int trial = 0; trial < 200; ++trial) {
      const Point p = random_point_near(origin(s), 2.0, rng);
      const Ray r = make_ray(p, random_unit_tangent(p, rng));
      const Point x = random_point_near(origin(s), 3.0, rng);
      const double ref = oracle::hyperbolic_busemann(r.base.coords, r.dir.vec, x.coords, k);
      CHECK_THAT(busemann(r, x), WithinAbs(ref, 1e-10));
    }
  }
}

TEST_CASE("SPD busemann matches the minor-ratio oracle and the commuting case") {
  Rng rng(4);
  for (int n : {2, 3}) {
    const auto m = SpaceDescriptor::spd(n);
    for (int trial = 0; trial < 100; ++trial) {
      const Point p = random_point_near(origin(m), 1.5, rng);
      const Ray r = make_ray(p, random_unit_tangent(p, rng));
      const Point x = random_point_near(origin(m), 2.0, rng);
      const double ref = oracle::spd_busemann(oracle::mat(p), as_matrix(r.dir.vec, n), oracle::mat(x));
      CHECK_THAT(busemann(r, x), WithinAbs(ref, 1e-9));
    }
  }
  // Flat case: ray(I, diag(l)) at diag(x): B = -sum l_i ln x_i.
  const auto m = SpaceDescriptor::spd(3);
  const Point i3 = spd(m, diag({1, 1, 1}));
  const double a = 0.6, b = -0.48, c = std::sqrt(1 - a * a - b * b);
  const Ray r = make_ray(i3, spd_tangent(i3, diag({a, b, c})));
  const Point x = spd(m, diag({2.0, 0.5, 3.0}));
  CHECK_THAT(busemann(r, x), WithinAbs(-(a * std::log(2.0) + b * std::log(0.5) + c * std::log(3.0)), 1e-13));
}

TEST_CASE("closed form and numeric limit agree") {
  Rng rng(5);
  for (const auto& sp : all_spaces()) {
    double worst = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const Point p = random_point_near(origin(sp), 1.0, rng);
      const Ray r = make_ray(p, random_unit_tangent(p, rng));
      const Point x = random_point_near(origin(sp), 2.5, rng);
      worst = std::max(worst, std::abs(busemann(r, x) - busemann_numeric(r, x, SearchBudget{})));
    }
    INFO(sp.name());
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("product busemann omits null factors") {
  const auto s = h2xr();
  const Point o = origin(s);
  const Tangent flat = join_tangents(o, zero_tangent(factor_point(o, 0)),
                                     make_tangent(factor_point(o, 1), Eigen::VectorXd::Ones(1)));
  const Ray r = make_ray(o, flat);
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Point x = random_point_near(o, 3.0, rng);
    CHECK_THAT(busemann(r, x), WithinAbs(-factor_point(x, 1).coords(0), 1e-14));
  }
}

TEST_CASE("busemann properties") {
  Rng rng(7);
  for (const auto& sp : all_spaces()) {
    INFO(sp.name());
    const Point o = origin(sp);
    for (int trial = 0; trial < 150; ++trial) {
      const Point p = random_point_near(o, 1.0, rng);
      const Ray r = make_ray(p, random_unit_tangent(p, rng));
      const Point x = random_point_near(o, 3.0, rng);
      const Point y = random_point_near(o, 3.0, rng);
      CHECK(std::abs(busemann(r, x) - busemann(r, y)) <= dist(x, y) + 1e-9);
      const Tangent u = random_unit_tangent(x, rng);
      const double h = 0.1;
      CHECK(busemann(r, exp(x, h * u)) - 2 * busemann(r, x) + busemann(r, exp(x, -h * u)) >= -1e-9);
      CHECK(std::abs(h_kernel(p, x, y)) <= dist(x, p) * dist(y, p) + 1e-9);
    }
    const Ray r = make_ray(o, random_unit_tangent(o, rng));
    for (double t = -3; t <= 3; t += 0.25) CHECK_THAT(busemann(r, exp(o, t * r.dir)), WithinAbs(-t, 1e-9));
  }
}

TEST_CASE("asymptote examples") {
  const Point o = origin(h2());
  const Ray r = make_ray(o, tv(o, {1, 0, 0}));
  const double s1 = std::sinh(1.0), c1 = std::cosh(1.0);
  const Ray a = asymptote(pt(h2(), {s1, 0, c1}), r);
  CHECK((a.dir.vec - Eigen::Vector3d(c1, 0, s1)).norm() < 1e-12);
  const Point q = pt(h2(), {0, s1, c1});
  const Ray b = asymptote(q, r);
  CHECK((b.dir.vec - Eigen::Vector3d(0.6481, -1.1752, -0.8951)).cwiseAbs().maxCoeff() < 1e-4);
  CHECK_THAT(static_cast<double>(oracle::minkowski_ld(b.dir.vec, b.dir.vec)), WithinAbs(1, 1e-12));
  CHECK_THAT(static_cast<double>(oracle::minkowski_ld(q.coords, b.dir.vec)), WithinAbs(0, 1e-12));
  const auto r2 = SpaceDescriptor::euclidean(2);
  const Ray e = asymptote(pt(r2, {5, 5}), make_ray(origin(r2), tv(origin(r2), {1, 0})));
  CHECK((e.dir.vec - Eigen::Vector2d(1, 0)).norm() == 0);
  CHECK((e.base.coords - Eigen::Vector2d(5, 5)).norm() == 0);
}

TEST_CASE("asymptotic rays stay close and differ by a constant Busemann offset") {
  Rng rng(8);
  for (const auto& sp : all_spaces()) {
    INFO(sp.name());
    const Point o = origin(sp);
    for (int trial = 0; trial < 10; ++trial) {
      const Ray r = make_ray(o, random_unit_tangent(o, rng));
      const Point q = random_point_near(o, 2.0, rng);
      const Ray a = asymptote(q, r);
      CHECK_THAT(norm(a.dir), WithinAbs(1.0, 1e-10));
      const double d0 = dist(q, o);
      for (double t = 0; t <= 20; t += 1) CHECK(dist(ray_point(r, t), ray_point(a, t)) <= d0 + 1e-3);
      const double c0 = busemann(r, q) - busemann(a, q);
      for (int j = 0; j < 5; ++j) {
        const Point x = random_point_near(o, 2.0, rng);
        CHECK_THAT(busemann(r, x) - busemann(a, x), WithinAbs(c0, 1e-6));
      }
    }
  }
}

TEST_CASE("h_kernel examples") {
  const auto r2 = SpaceDescriptor::euclidean(2);
  CHECK_THAT(h_kernel(origin(r2), pt(r2, {1, 2}), pt(r2, {3, 4})), WithinAbs(11, 1e-12));
  const Point o = origin(h2());
  CHECK(h_kernel(o, o, h2_at(1.0)) == 0.0);
  const Point z = pt(h2(), {std::sinh(1.0), 0, std::cosh(1.0)});
  CHECK_THAT(h_kernel(o, z, z), WithinAbs(1.0, 1e-12));
  Rng rng(9);
  const auto r3 = SpaceDescriptor::euclidean(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const Point p = random_point_near(origin(r3), 3.0, rng);
    const Point a = random_point_near(origin(r3), 3.0, rng);
    const Point b = random_point_near(origin(r3), 3.0, rng);
    CHECK_THAT(h_kernel(p, a, b), WithinAbs((a.coords - p.coords).dot(b.coords - p.coords), 1e-12));
  }
}
