#include "hadamard/linalg.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace hadamard::linalg;
using Catch::Matchers::WithinAbs;

namespace {

Eigen::MatrixXd random_sym(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g(rng);
  return 0.5 * (a + a.transpose());
}

}  // namespace

TEST_CASE("sym_fn examples") {
  Eigen::MatrixXd d = Eigen::Vector2d(1, 4).asDiagonal();
  CHECK((sym_fn(d, [](double x) { return std::sqrt(x); }) - Eigen::Matrix2d(Eigen::Vector2d(1, 2).asDiagonal())).norm() < 1e-14);
  CHECK(sym_fn(Eigen::MatrixXd::Identity(3, 3), [](double x) { return std::log(x); }).norm() < 1e-15);
  Eigen::MatrixXd e = Eigen::Vector2d(std::exp(1.0), std::exp(-1.0)).asDiagonal();
  CHECK((logm_spd(e) - Eigen::Matrix2d(Eigen::Vector2d(1, -1).asDiagonal())).norm() < 1e-14);
  CHECK_THROWS_AS(logm_spd(Eigen::Matrix2d(Eigen::Vector2d(1, -1).asDiagonal())), std::domain_error);
}

TEST_CASE("sym_fn with identity reproduces the matrix") {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 6; ++n) {
    const Eigen::MatrixXd a = random_sym(rng, n);
    CHECK((sym_fn(a, [](double x) { return x; }) - a).norm() < 1e-13 * (1 + a.norm()));
  }
}

TEST_CASE("Jacobi eigenvalues agree with Eigen's solver") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 6;
    const Eigen::MatrixXd a = random_sym(rng, n);
    SymEigen j = jacobi_eigen(a);
    Eigen::VectorXd mine = j.values;
    std::sort(mine.data(), mine.data() + n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a);
    CHECK((mine - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12 * (1 + a.norm()));
    CHECK((j.vectors.transpose() * j.vectors - Eigen::MatrixXd::Identity(n, n)).norm() < 1e-13);
    CHECK((j.vectors * j.values.asDiagonal() * j.vectors.transpose() - a).norm() < 1e-12 * (1 + a.norm()));
  }
}

TEST_CASE("expm and logm are inverse on SPD matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::MatrixXd s = random_sym(rng, 3);
    const Eigen::MatrixXd x = expm_sym(s);
    CHECK((logm_spd(x) - s).norm() < 1e-12 * (1 + s.norm()));
    const Eigen::MatrixXd r = sqrtm_spd(x);
    CHECK((r * r - x).norm() < 1e-12 * x.norm());
  }
}

TEST_CASE("long double Jacobi resolves graded matrices") {
  // diag(1e30, 1, 1e-30) under a small rotation: relative accuracy on every
  // eigenvalue.
  using M = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  M d = M::Zero(3, 3);
  d(0, 0) = 1e30L;
  d(1, 1) = 1.0L;
  d(2, 2) = 1e-30L;
  M a = d;
  a(0, 1) = a(1, 0) = 1e14L;
  a(1, 2) = a(2, 1) = 1e-16L;
  jacobi_diagonalize<long double>(a, nullptr);
  std::vector<long double> ev = {a(0, 0), a(1, 1), a(2, 2)};
  std::sort(ev.begin(), ev.end());
  // Schur complements give the exact values to relative 1e-15.
  CHECK(std::abs(ev[2] / 1e30L - 1.0L) < 1e-15L);
  CHECK(std::abs(ev[1] / (1.0L - 1e-2L) - 1.0L) < 1e-12L);
  CHECK(ev[0] > 0);
}
