#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "steklov/linalg.hpp"

using namespace steklov;

namespace {

DenseSymMatrix random_symmetric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> z;
  DenseSymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a.set(i, j, z(rng));
  }
  return a;
}

}  // namespace

TEST_CASE("from_dense symmetrizes small asymmetry and rejects large asymmetry") {
  DenseMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(0, 1) = 2.0;
  m(1, 0) = 2.0 + 1e-14;
  m(1, 1) = 3.0;
  const DenseSymMatrix s = DenseSymMatrix::from_dense(m);
  CHECK(s(0, 1) == s(1, 0));
  m(1, 0) = 2.1;
  CHECK_THROWS_AS(DenseSymMatrix::from_dense(m), NumericError);
  m(1, 0) = std::nan("");
  CHECK_THROWS_AS(DenseSymMatrix::from_dense(m), NumericError);
  CHECK_THROWS_AS(DenseSymMatrix::from_dense(DenseMatrix(2, 3)), ParameterError);
}

TEST_CASE("matrix helpers") {
  DenseSymMatrix a = DenseSymMatrix::identity(3);
  a.add(0, 2, -4.0);
  CHECK(a(2, 0) == -4.0);
  CHECK(a.max_abs() == 4.0);
  CHECK(a.inf_norm() == 5.0);
  const std::vector<double> x{1.0, 2.0, 3.0};
  CHECK(a.multiply(x) == std::vector<double>{-11.0, 2.0, -1.0});
  CHECK(dot(x, x) == 14.0);
  CHECK(inf_norm(std::vector<double>{-5.0, 2.0}) == 5.0);
  const std::vector<double> d{1.0, 2.0};
  CHECK(DenseSymMatrix::diagonal(d)(1, 1) == 2.0);
}

TEST_CASE("Cholesky solves SPD systems and rejects indefinite ones") {
  DenseSymMatrix a(3);
  a.set(0, 0, 4.0);
  a.set(1, 1, 3.0);
  a.set(2, 2, 2.0);
  a.set(0, 1, 1.0);
  a.set(1, 2, -1.0);
  const std::vector<double> rhs{1.0, -2.0, 0.5};
  const std::vector<double> x = solve_spd(a, rhs);
  const std::vector<double> back = a.multiply(x);
  for (std::size_t i = 0; i < 3; ++i) CHECK(back[i] == doctest::Approx(rhs[i]).epsilon(1e-14));

  DenseSymMatrix indefinite(2);
  indefinite.set(0, 1, 1.0);
  CHECK_THROWS_AS(CholeskyFactor{indefinite}, NumericError);
  CHECK_THROWS_AS(CholeskyFactor(a).solve(std::vector<double>{1.0}), ParameterError);
}

TEST_CASE("Jacobi on a 2x2 matches the closed form") {
  DenseSymMatrix a(2);
  a.set(0, 0, 2.0);
  a.set(1, 1, -1.0);
  a.set(0, 1, 3.0);
  const auto e = eigen_symmetric(a);
  const double mid = 0.5, rad = std::sqrt(1.5 * 1.5 + 9.0);
  CHECK(e.values[0] == doctest::Approx(mid - rad).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(mid + rad).epsilon(1e-14));
}

TEST_CASE("Jacobi reproduces the path Laplacian spectrum") {
  const std::size_t n = 12;
  DenseSymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a.set(i, i, (i == 0 || i + 1 == n) ? 1.0 : 2.0);
    if (i + 1 < n) a.set(i, i + 1, -1.0);
  }
  const auto values = eigenvalues_symmetric(a);
  for (std::size_t k = 0; k < n; ++k) {
    const double expected = 2.0 - 2.0 * std::cos(std::numbers::pi * k / n);
    CHECK(std::abs(values[k] - expected) < 1e-12);
  }
}

TEST_CASE("Jacobi eigenpairs have small residuals and orthonormal vectors") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const DenseSymMatrix a = random_symmetric(15, seed);
    const auto e = eigen_symmetric(a);
    for (std::size_t k = 0; k + 1 < 15; ++k) CHECK(e.values[k] <= e.values[k + 1]);
    for (std::size_t k = 0; k < 15; ++k) {
      const std::vector<double> v = e.vectors.column(k);
      const std::vector<double> av = a.multiply(v);
      double res = 0.0;
      for (std::size_t i = 0; i < 15; ++i) res = std::max(res, std::abs(av[i] - e.values[k] * v[i]));
      CHECK(res < 1e-10);
      for (std::size_t l = 0; l < 15; ++l) {
        const double expected = k == l ? 1.0 : 0.0;
        CHECK(std::abs(dot(v, e.vectors.column(l)) - expected) < 1e-12);
      }
      const auto first = std::find_if(v.begin(), v.end(), [](double x) { return std::abs(x) > 1e-9; });
      CHECK(*first > 0.0);
    }
  }
}

TEST_CASE("Jacobi reports non-convergence and non-finite input") {
  JacobiOptions options;
  options.sweep_cap_factor = 0;
  CHECK_THROWS_AS(eigen_symmetric(random_symmetric(6, 3), options), NumericError);
  DenseMatrix bad(1, 1);
  bad(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(DenseSymMatrix::from_dense(bad), NumericError);
}
