#include "helpers.hpp"
#include "oracles.hpp"

#include "hadamard/duality.hpp"
#include "hadamard/isometry.hpp"

#include <catch_amalgamated.hpp>

using namespace th;
using Catch::Matchers::WithinAbs;

TEST_CASE("apply examples") {
  for (const auto& sp : all_spaces()) {
    Rng rng(71);
    const Point x = random_point_near(origin(sp), 2.0, rng);
    CHECK(apply(IsometryRep::identity(sp), x).coords == x.coords);
  }
  const auto s = h2();
  const Point y = apply(IsometryRep::lorentz(s, lorentz_boost(2, 0, 1.0)), pt(s, {0, 0, 1}));
  CHECK((y.coords - Eigen::Vector3d(std::sinh(1.0), 0, std::cosh(1.0))).norm() < 1e-15);

  const auto m = SpaceDescriptor::spd(2);
  const Point c = apply(IsometryRep::spd_congruence(m, diag({2, 1})), spd(m, diag({1, 1})));
  CHECK((as_matrix(c.coords, 2) - diag({4, 1})).norm() == 0.0);
  const Point inv = apply(IsometryRep::spd_inverse(m), spd(m, diag({4, 0.5})));
  CHECK((as_matrix(inv.coords, 2) - diag({0.25, 2})).norm() < 1e-15);
}

TEST_CASE("differential examples") {
  const auto m = SpaceDescriptor::spd(2);
  const Point i2 = spd(m, diag({1, 1}));
  const Tangent u = spd_tangent(i2, diag({1, -1}));
  CHECK(differential(IsometryRep::identity(m), i2, u).vec == u.vec);
  const Tangent w = differential(IsometryRep::spd_inverse(m), i2, u);
  CHECK((as_matrix(w.vec, 2) - diag({-1, 1})).norm() < 1e-15);
  CHECK_THAT(inner(w.base, w, w), WithinAbs(2.0, 1e-14));

  const auto s = h2();
  const IsometryRep boost = IsometryRep::lorentz(s, lorentz_boost(2, 0, 1.3));
  Rng rng(72);
  for (int i = 0; i < 100; ++i) {
    const Point b = random_point_near(origin(s), 2.0, rng);
    const Tangent t = std::uniform_real_distribution<double>(0.1, 3.0)(rng) * random_unit_tangent(b, rng);
    const Tangent d = differential(boost, b, t);
    CHECK_THAT(norm(d), WithinAbs(norm(t), 1e-12));
    CHECK_THAT(static_cast<double>(oracle::minkowski_ld(d.vec, d.vec)), WithinAbs(norm(t) * norm(t), 1e-11));
  }
  CHECK_THROWS(differential(boost, origin(s), make_tangent(h2_at(1.0), Eigen::Vector3d(0, 1, 0))));
}

TEST_CASE("inverse and compose") {
  const auto r2 = SpaceDescriptor::euclidean(2);
  const double c = std::cos(0.4), s = std::sin(0.4);
  Eigen::Matrix2d q;
  q << c, -s, s, c;
  const Eigen::Vector2d b(1, -2);
  const IsometryRep e = IsometryRep::euclidean_rigid(r2, q, b);
  const IsometryRep ei = inverse(e);
  REQUIRE(ei.kind == IsometryKind::EuclideanRigid);
  CHECK((ei.matrix - q.transpose()).norm() < 1e-15);
  CHECK((ei.offset + q.transpose() * b).norm() < 1e-15);

  const auto m = SpaceDescriptor::spd(2);
  Eigen::Matrix2d a;
  a << 2, 1, 0, 1;
  const IsometryRep ci = inverse(IsometryRep::spd_congruence(m, a));
  REQUIRE(ci.kind == IsometryKind::SPDCongruence);
  CHECK((ci.matrix - a.inverse()).norm() < 1e-14);

  for (const auto& sp : all_spaces()) {
    INFO(sp.name());
    const IsometryRep iso = random_isometry(sp, 5);
    const IsometryRep round = compose(iso, inverse(iso));
    Rng rng(73);
    for (int i = 0; i < 20; ++i) {
      const Point x = random_point_near(origin(sp), 2.5, rng);
      CHECK(dist(apply(inverse(iso), apply(iso, x)), x) <= 1e-9);
      CHECK(dist(apply(round, x), x) <= 1e-9);
    }
  }
  CHECK_THROWS(compose(random_isometry(h2(), 1), random_isometry(SpaceDescriptor::euclidean(2), 1)));
}

TEST_CASE("random isometries are deterministic and valid") {
  for (const auto& sp : all_spaces()) {
    INFO(sp.name());
    for (std::uint64_t seed : {1u, 2u, 99u}) {
      const IsometryRep a = random_isometry(sp, seed);
      const IsometryRep b = random_isometry(sp, seed);
      CHECK(a.kind == b.kind);
      CHECK(a.matrix == b.matrix);
      CHECK(a.offset == b.offset);
      CHECK(a.parts.size() == b.parts.size());
      CHECK_NOTHROW(validate(a));
      CHECK(constraint_defect(a) <= 1e-10);
      Rng rng(seed);
      double worst = 0;
      for (int i = 0; i < 100; ++i) {
        const Point x = random_point_near(origin(sp), 2.5, rng);
        const Point y = random_point_near(origin(sp), 2.5, rng);
        worst = std::max(worst, std::abs(dist(apply(a, x), apply(a, y)) - dist(x, y)));
      }
      CHECK(worst <= 1e-10);
    }
  }
}

TEST_CASE("constraint validation") {
  const auto s = h2();
  Eigen::Matrix3d bad = Eigen::Matrix3d::Identity();
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(IsometryRep::lorentz(s, bad), std::invalid_argument);
  // Small drift is repaired.
  Eigen::Matrix3d drift = lorentz_boost(2, 1, 0.5);
  drift(0, 0) += 1e-9;
  const IsometryRep fixed = IsometryRep::lorentz(s, drift);
  CHECK(constraint_defect(fixed) <= 1e-10);
  // Time-reversing maps leave the upper sheet.
  Eigen::Matrix3d flip = Eigen::Matrix3d::Identity();
  flip(2, 2) = -1;
  CHECK_THROWS_AS(IsometryRep::lorentz(s, flip), std::invalid_argument);
  const auto r2 = SpaceDescriptor::euclidean(2);
  CHECK_THROWS_AS(IsometryRep::euclidean_rigid(r2, 2.0 * Eigen::Matrix2d::Identity(), Eigen::Vector2d::Zero()),
                  std::invalid_argument);
  const auto m = SpaceDescriptor::spd(2);
  CHECK_THROWS_AS(IsometryRep::spd_congruence(m, diag({1e9, 1})), std::invalid_argument);
}

TEST_CASE("chain rule for differentials") {
  for (const auto& sp : all_spaces()) {
    INFO(sp.name());
    const IsometryRep i1 = random_isometry(sp, 11);
    const IsometryRep i2 = random_isometry(sp, 12);
    const IsometryRep both = compose(i1, i2);
    Rng rng(74);
    for (int i = 0; i < 20; ++i) {
      const Point b = random_point_near(origin(sp), 2.0, rng);
      const Tangent u = random_unit_tangent(b, rng);
      const Tangent lhs = differential(both, b, u);
      const Tangent rhs = differential(i1, apply(i2, b), differential(i2, b, u));
      CHECK((lhs.vec - rhs.vec).norm() <= 1e-10 * (1 + rhs.vec.norm()));
      CHECK_THAT(norm(lhs), WithinAbs(1.0, 1e-10));
    }
  }
  const IsometryRep inv = IsometryRep::spd_inverse(SpaceDescriptor::spd(3));
  const IsometryRep twice = compose(inv, inv);
  Rng rng(75);
  const Point x = random_point_near(origin(SpaceDescriptor::spd(3)), 2.0, rng);
  CHECK(dist(apply(twice, x), x) <= 1e-12);
}

TEST_CASE("isometries commute with the geometry") {
  for (const auto& sp : all_spaces()) {
    INFO(sp.name());
    const IsometryRep iso = random_isometry(sp, 21);
    Rng rng(76);
    for (int i = 0; i < 10; ++i) {
      const Point x = random_point_near(origin(sp), 2.0, rng);
      const Point y = random_point_near(origin(sp), 2.0, rng);
      const Tangent l = log(x, y);
      CHECK(norm(differential(iso, x, l) - log(apply(iso, x), apply(iso, y))) <= 1e-8);
      const Ray r = make_ray(x, random_unit_tangent(x, rng));
      const Ray ri{apply(iso, x), differential(iso, x, r.dir)};
      CHECK_THAT(busemann(ri, apply(iso, y)), WithinAbs(busemann(r, y), 1e-8));
    }
  }
}

TEST_CASE("conjugate transformation law") {
  SearchBudget b;
  b.sphere_samples = 32;
  b.t_samples = 32;
  ConjugateOptions opts;
  opts.probe_divergence = false;
  for (const auto& sp : {h2(), SpaceDescriptor::euclidean(2), SpaceDescriptor::spd(2)}) {
    INFO(sp.name());
    const Point p = origin(sp);
    const IsometryRep iso = random_isometry(sp, 31);
    const Point q = apply(inverse(iso), p);
    const FunctionSpec f = FunctionSpec::radial(HSpec::quadratic(1), p);
    const FunctionSpec fi = compose(f, iso);
    Rng rng(77);
    for (int i = 0; i < 5; ++i) {
      const Point x = random_point_near(q, 2.0, rng);
      // Exact radial conjugates on both sides.
      CHECK_THAT(radial_conjugate(HSpec::quadratic(1), p, apply(iso, x)).value,
                 WithinAbs(radial_conjugate(HSpec::quadratic(1), q, x).value, 1e-8));
      const double lhs = conjugate(f, p, apply(iso, x), b, opts).value.value;
      const double rhs = conjugate(fi, q, x, b, opts).value.value;
      CHECK_THAT(lhs, WithinAbs(rhs, 2e-3));
    }
  }
}
