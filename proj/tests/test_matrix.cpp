#include <doctest.h>

#include <random>

#include "gcfib/error.hpp"
#include "gcfib/matrix.hpp"
#include "test_support.hpp"

using namespace gcfib;
using gcfib::testing::random_matrix;

namespace {
Matrix m2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}
}  // namespace

TEST_CASE("real eigenvalue detection") {
  CHECK_FALSE(has_real_eigenvalue(m2(0, -1, 1, 0)));
  CHECK(has_real_eigenvalue(m2(1, 0, 0, 2)));
  CHECK(has_real_eigenvalue(m2(0, 1, 0, 0)));  // nilpotent: eigenvalue 0
  Matrix rot3 = Matrix::Zero(3, 3);
  rot3(0, 1) = -1;
  rot3(1, 0) = 1;
  CHECK(has_real_eigenvalue(rot3));  // odd size always has one
}

TEST_CASE("2x2 criterion on fixed examples") {
  // trace^2 - 4 det = 16 - 52 < 0
  CHECK(no_real_eigs_2x2_criterion(m2(3, -2, 5, 1)));
  CHECK_FALSE(has_real_eigenvalue(m2(3, -2, 5, 1)));
  CHECK_FALSE(no_real_eigs_2x2_criterion(m2(1, 2, 3, 4)));
  CHECK_FALSE(no_real_eigs_2x2_criterion(m2(0, 0, 0, 0)));
  CHECK_THROWS_AS(no_real_eigs_2x2_criterion(Matrix::Identity(3, 3)), DimensionError);
}

TEST_CASE("2x2 criterion agrees with the eigensolver away from the boundary") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int k = 0; k < 5000; ++k) {
    const Matrix a = random_matrix(rng, 2, 2);
    const double disc = (a(0, 0) - a(1, 1)) * (a(0, 0) - a(1, 1)) + 4 * a(0, 1) * a(1, 0);
    if (std::abs(disc) < 1e-6) continue;
    ++checked;
    CHECK(no_real_eigs_2x2_criterion(a) == !has_real_eigenvalue(a));
  }
  CHECK(checked > 4900);
}

TEST_CASE("eigenvalue verdict is transpose invariant") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 300; ++k) {
    const int dim = 2 * (1 + k % 4);
    const Matrix a = random_matrix(rng, dim, dim);
    CHECK(has_real_eigenvalue(a) == has_real_eigenvalue(a.transpose()));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(eigenvalues(Matrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(eigenvalues(Matrix(0, 0)), DimensionError);
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 1) = std::nan("");
  CHECK_THROWS_AS(has_real_eigenvalue(bad), ValidationError);
}

TEST_CASE("determinant matches the Leibniz formula") {
  CHECK(determinant(m2(1, 2, 3, 4)) == doctest::Approx(-2.0));
  std::mt19937_64 rng(13);
  for (int dim = 1; dim <= 6; ++dim) {
    const Matrix a = random_matrix(rng, dim, dim);
    CHECK(determinant(a) == doctest::Approx(gcfib::testing::determinant_leibniz(a)).epsilon(1e-12));
  }
}

TEST_CASE("block diagonal assembly") {
  const Matrix b = block_diagonal({m2(1, 2, 3, 4), Matrix::Constant(1, 1, 5.0)});
  REQUIRE(b.rows() == 3);
  CHECK(b(0, 1) == 2);
  CHECK(b(2, 2) == 5);
  CHECK(b(0, 2) == 0);
}

TEST_CASE("SkewMatrix keeps antisymmetry") {
  SkewMatrix s(4);
  s.set(0, 3, 2.5);
  CHECK(s(3, 0) == -2.5);
  CHECK(s(1, 1) == 0.0);
  CHECK((s.dense() + s.dense().transpose()).isZero(0.0));
  CHECK(s.half_dim() == 2);
  CHECK(s.infinity_norm() == 2.5);
  CHECK_THROWS_AS(SkewMatrix(3), DimensionError);
  CHECK_THROWS_AS(SkewMatrix(0), DimensionError);
  CHECK_THROWS_AS(s.set(2, 2, 1.0), ValidationError);
}

TEST_CASE("from_dense names the first non-skew pair") {
  Matrix b(2, 2);
  b << 0, 1, 2, 0;
  try {
    (void)SkewMatrix::from_dense(b);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
    CHECK(std::string(e.what()).find("(2,1)") != std::string::npos);
  }
  b(1, 0) = -1 + 1e-14;
  CHECK_NOTHROW((void)SkewMatrix::from_dense(b, 1e-12));
  CHECK_THROWS_AS((void)SkewMatrix::from_dense(Matrix::Identity(2, 2)), ValidationError);
}

TEST_CASE("skew part is A - A^T") {
  const Matrix a = m2(1, 2, 5, 7);
  const SkewMatrix s = SkewMatrix::skew_part(a);
  CHECK(s(0, 1) == -3.0);
  CHECK(s(1, 0) == 3.0);
}

TEST_CASE("determinant and eigenvalue goldens") {
  CHECK(determinant(Matrix::Identity(4, 4)) == 1.0);
  CHECK(determinant(Eigen::Vector3d(1, 2, 3).asDiagonal().toDenseMatrix()) == doctest::Approx(6.0));
  Matrix b(4, 4);
  b << 0, 1, 1, 0, -1, 0, 0, 1, -1, 0, 0, 1, 0, -1, -1, 0;
  CHECK(determinant(b) == 0.0);
  CHECK_FALSE(no_real_eigs_2x2_criterion(m2(0, 1, 1, 0)));
  CHECK(no_real_eigs_2x2_criterion(m2(0, -1, 1, 0)));
  Matrix d(4, 4);
  d << 0, 0.5, 1, 0, -0.5, 0, 0, 1, 0, 0, 0, 0.5, 0, 0, -0.5, 0;
  CHECK_FALSE(has_real_eigenvalue(d));
  CHECK_THROWS_AS(determinant(Matrix(2, 3)), DimensionError);
}
