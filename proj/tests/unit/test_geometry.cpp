#include "helpers.hpp"
#include "oracles.hpp"

#include "hadamard/errors.hpp"
#include "hadamard/linalg.hpp"

#include <catch_amalgamated.hpp>

using namespace th;
using Catch::Matchers::WithinAbs;

TEST_CASE("distance examples") {
  const auto s = h2();
  const Point p = pt(s, {0, 0, 1});
  const Point y = pt(s, {std::sinh(1.0), 0, std::cosh(1.0)});
  CHECK_THAT(dist(p, y), WithinAbs(1.0, 1e-12));
  const Point z = pt(s, {0, std::sinh(1.0), std::cosh(1.0)});
  const double c = std::cosh(1.0);
  CHECK_THAT(dist(y, z), WithinAbs(std::acosh(c * c), 1e-12));
  CHECK_THAT(dist(y, z), WithinAbs(1.5134, 1e-4));

  const auto m = SpaceDescriptor::spd(2);
  CHECK_THAT(dist(spd(m, diag({1, 1})), spd(m, diag({std::exp(1.0), 1}))), WithinAbs(1.0, 1e-13));
}

TEST_CASE("exp and log examples") {
  const auto s = h2();
  const Point p = origin(s);
  for (double t : {0.3, 1.0, 4.0}) {
    const Point g = exp(p, tv(p, {t, 0, 0}));
    CHECK((g.coords - Eigen::Vector3d(std::sinh(t), 0, std::cosh(t))).norm() < 1e-12 * std::cosh(t));
    CHECK_THAT(static_cast<double>(oracle::minkowski_ld(g.coords, g.coords)), WithinAbs(-1.0, 1e-12));
  }
  const Tangent l = log(p, pt(s, {std::sinh(1.0), 0, std::cosh(1.0)}));
  CHECK((l.vec - Eigen::Vector3d(1, 0, 0)).norm() < 1e-12);
  CHECK(norm(log(p, p)) == 0.0);

  const auto m = SpaceDescriptor::spd(2);
  const Point i2 = spd(m, diag({1, 1}));
  const Point e = exp(i2, spd_tangent(i2, diag({1, 0})));
  CHECK((as_matrix(e.coords, 2) - diag({std::exp(1.0), 1})).norm() < 1e-13);

  const auto r2 = SpaceDescriptor::euclidean(2);
  CHECK((log(origin(r2), pt(r2, {3, 4})).vec - Eigen::Vector2d(3, 4)).norm() == 0.0);
  for (const auto& sp : all_spaces()) {
    const Point o = origin(sp);
    CHECK(dist(exp(o, zero_tangent(o)), o) == 0.0);
  }
}

TEST_CASE("inner product and tangent basis examples") {
  const auto m = SpaceDescriptor::spd(2);
  const Point i2 = spd(m, diag({1, 1}));
  CHECK_THAT(inner(i2, spd_tangent(i2, diag({1, 1})), spd_tangent(i2, diag({1, 1}))), WithinAbs(2, 1e-15));
  CHECK_THAT(inner(i2, spd_tangent(i2, diag({1, -1})), spd_tangent(i2, diag({1, 1}))), WithinAbs(0, 1e-15));

  const auto b = tangent_basis(origin(h2()));
  REQUIRE(b.size() == 2);
  CHECK((b[0].vec - Eigen::Vector3d(1, 0, 0)).norm() < 1e-15);
  CHECK((b[1].vec - Eigen::Vector3d(0, 1, 0)).norm() < 1e-15);

  const auto bs = tangent_basis(i2);
  REQUIRE(bs.size() == 3);
  Eigen::Matrix2d off;
  off << 0, 1, 1, 0;
  CHECK((as_matrix(bs[0].vec, 2) - diag({1, 0})).norm() < 1e-15);
  CHECK((as_matrix(bs[1].vec, 2) - diag({0, 1})).norm() < 1e-15);
  CHECK((as_matrix(bs[2].vec, 2) - off / std::sqrt(2.0)).norm() < 1e-15);

  Rng rng(5);
  for (const auto& sp : all_spaces()) {
    for (int trial = 0; trial < 5; ++trial) {
      const Point x = random_point_near(origin(sp), 2.0, rng);
      const auto basis = tangent_basis(x);
      REQUIRE(static_cast<int>(basis.size()) == sp.dim());
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
          CHECK_THAT(inner(x, basis[i], basis[j]), WithinAbs(i == j ? 1.0 : 0.0, 1e-10));
      const Tangent u = random_unit_tangent(x, rng);
      CHECK_THAT(inner(x, u, u), WithinAbs(1.0, 1e-12));
    }
  }
}

TEST_CASE("sectional and Ricci examples") {
  const auto s = h2();
  const Point o = origin(s);
  const auto b = tangent_basis(o);
  CHECK_THAT(sectional(o, b[0], b[1]), WithinAbs(-1, 1e-12));
  CHECK_THAT(ricci_dir(o, b[0]), WithinAbs(-1, 1e-12));
  const auto h3 = SpaceDescriptor::hyperbolic(3, 2.0);
  const Point o3 = origin(h3);
  CHECK_THAT(ricci_dir(o3, tangent_basis(o3)[2]), WithinAbs(-4, 1e-12));

  const auto m = SpaceDescriptor::spd(2);
  const Point i2 = spd(m, diag({1, 1}));
  CHECK_THAT(sectional(i2, spd_tangent(i2, diag({1, 0})), spd_tangent(i2, diag({0, 1}))), WithinAbs(0, 1e-15));
  Eigen::Matrix2d off;
  off << 0, 1, 1, 0;
  const double r2 = std::sqrt(2.0);
  CHECK_THAT(sectional(i2, spd_tangent(i2, diag({1, -1}) / r2), spd_tangent(i2, off / r2)),
             WithinAbs(-0.5, 1e-14));
  CHECK_THAT(ricci_dir(i2, spd_tangent(i2, diag({1, 1}) / r2)), WithinAbs(0, 1e-15));

  const auto hr = h2xr();
  const Point q = origin(hr);
  const Tangent dt = join_tangents(q, zero_tangent(factor_point(q, 0)),
                                   make_tangent(factor_point(q, 1), Eigen::VectorXd::Ones(1)));
  CHECK_THAT(ricci_dir(q, dt), WithinAbs(0, 1e-15));
  CHECK_THROWS(sectional(o, b[0], 2.0 * b[0]));
  CHECK_THROWS(ricci_dir(o, 2.0 * b[0]));
}

TEST_CASE("SPD curvature is nonpositive and Ricci is completion independent") {
  Rng rng(11);
  for (int n : {2, 3}) {
    const auto m = SpaceDescriptor::spd(n);
    for (int trial = 0; trial < 20; ++trial) {
      const Point x = random_point_near(origin(m), 2.0, rng);
      const Tangent u = random_unit_tangent(x, rng);
      const Tangent v = random_unit_tangent(x, rng);
      const double k = sectional(x, u, v);
      CHECK(k <= 1e-12);
      CHECK(k >= -0.5 - 1e-12);
      // A second completion: rotate the first one by a random orthogonal map.
      const auto c1 = orthonormal_completion(x, u);
      const int d = static_cast<int>(c1.size());
      Eigen::MatrixXd g(d, d);
      for (int i = 0; i < d; ++i) g.col(i) = gaussian_vector(rng, d);
      const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
      std::vector<Tangent> c2;
      for (int i = 0; i < d; ++i) {
        Tangent t = zero_tangent(x);
        for (int j = 0; j < d; ++j) t = t + q(j, i) * c1[static_cast<std::size_t>(j)];
        c2.push_back(t);
      }
      CHECK_THAT(ricci_dir(x, u, c1), WithinAbs(ricci_dir(x, u, c2), 1e-8));
    }
  }
}

TEST_CASE("round trip, geodesic speed and distance oracles") {
  Rng rng(7);
  for (const auto& sp : all_spaces()) {
    const Point o = origin(sp);
    double rt = 0, speed = 0, oracle_gap = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const Point p = random_point_near(o, 3.0, rng);
      const Point q = random_point_near(o, 3.0, rng);
      rt = std::max(rt, dist(exp(p, log(p, q)), q));
      CHECK_THAT(norm(log(p, q)), WithinAbs(dist(p, q), 1e-9 * (1 + dist(p, q))));
      const Tangent u = random_unit_tangent(p, rng);
      const double t = std::uniform_real_distribution<double>(-5, 5)(rng);
      speed = std::max(speed, std::abs(dist(p, exp(p, t * u)) - std::abs(t)));
      double ref = 0;
      switch (sp.kind()) {
        case SpaceKind::Euclidean: ref = (p.coords - q.coords).norm(); break;
        case SpaceKind::Hyperbolic: ref = oracle::hyperbolic_dist(p.coords, q.coords, sp.k()); break;
        case SpaceKind::SPD: ref = oracle::spd_dist(oracle::mat(p), oracle::mat(q)); break;
        case SpaceKind::Product: {
          const double d1 = oracle::hyperbolic_dist(factor_point(p, 0).coords, factor_point(q, 0).coords, 1.0);
          const double d2 = (factor_point(p, 1).coords - factor_point(q, 1).coords).norm();
          ref = std::sqrt(d1 * d1 + d2 * d2);
          break;
        }
      }
      oracle_gap = std::max(oracle_gap, std::abs(dist(p, q) - ref));
      CHECK(dist(p, q) == dist(q, p));
    }
    INFO(sp.name());
    CHECK(rt <= 1e-8);
    CHECK(speed <= 1e-8);
    CHECK(oracle_gap <= 1e-9);
  }
}

TEST_CASE("hyperbolic exp stays on the sheet") {
  // Within k d <= 6 of the origin the absolute constraint is representable in
  // double precision; further out only its relative form is.
  Rng rng(8);
  for (double k : {0.5, 1.0, 2.0}) {
    const auto s = SpaceDescriptor::hyperbolic(3, k);
    for (int trial = 0; trial < 200; ++trial) {
      const Point p = random_point_near(origin(s), 2.0 / k, rng);
      const double len = std::uniform_real_distribution<double>(0, 4.0 / k)(rng);
      const Point q = exp(p, len * random_unit_tangent(p, rng));
      const double defect = static_cast<double>(oracle::minkowski_ld(q.coords, q.coords)) + 1.0 / (k * k);
      CHECK(std::abs(defect) <= 1e-9);
      CHECK(q.coords(3) > 0);
      const Point far = exp(p, 10.0 / k * random_unit_tangent(p, rng));
      const double rel = static_cast<double>(oracle::minkowski_ld(far.coords, far.coords)) * k * k + 1.0;
      CHECK(std::abs(rel) <= 1e-9 * far.coords.squaredNorm() * k * k);
    }
  }
}

TEST_CASE("hyperbolic distance is accurate far from the origin") {
  const auto s = h2();
  const Point o = origin(s);
  for (double r : {5.0, 20.0, 30.0}) {
    // Two points at radius r separated by a known angle: the law of cosines
    // of constant curvature gives the distance.
    const double th = 1e-6;
    const Point x = exp(o, r * tv(o, {1, 0, 0}));
    const Point y = exp(o, r * tv(o, {std::cos(th), std::sin(th), 0}));
    const double ref = 2 * std::asinh(std::sinh(r) * std::sin(th / 2));
    CHECK_THAT(dist(x, y), WithinAbs(ref, 1e-9 * std::max(1.0, ref)));
  }
}

TEST_CASE("product distance is Pythagorean") {
  Rng rng(9);
  const auto s = h2xr();
  for (int trial = 0; trial < 200; ++trial) {
    const Point x = random_point_near(origin(s), 3.0, rng);
    const Point y = random_point_near(origin(s), 3.0, rng);
    const double d1 = dist(factor_point(x, 0), factor_point(y, 0));
    const double d2 = dist(factor_point(x, 1), factor_point(y, 1));
    CHECK_THAT(dist(x, y) * dist(x, y), WithinAbs(d1 * d1 + d2 * d2, 1e-10));
  }
}

TEST_CASE("validation errors") {
  const auto s = h2();
  CHECK_THROWS_AS(pt(s, {0, 0, -1}), InvalidPoint);
  CHECK_THROWS_AS(pt(s, {1, 0, 1}), InvalidPoint);
  CHECK_THROWS_AS(tv(origin(s), {0, 0, 1}), NotTangent);
  const auto m = SpaceDescriptor::spd(2);
  Eigen::Matrix2d bad;
  bad << 1, 2, 2, 1;
  CHECK_THROWS_AS(spd(m, bad), InvalidPoint);
  Eigen::Matrix2d asym;
  asym << 2, 0.1, 0, 2;
  CHECK_THROWS_AS(spd(m, asym), InvalidPoint);
  CHECK_THROWS_AS(dist(origin(s), origin(SpaceDescriptor::euclidean(2))), SpaceMismatch);
  CHECK_THROWS(SpaceDescriptor::hyperbolic(2, -1.0));
  CHECK_THROWS(s.with_bounds({2.0, 1.0}));
  CHECK(s.with_bounds({1.0, 1.0}).curvature_bounds().has_value());
}
