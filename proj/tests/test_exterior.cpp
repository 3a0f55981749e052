#include <doctest.h>

#include <random>

#include "gcfib/error.hpp"
#include "gcfib/exterior.hpp"
#include "gcfib/pfaffian.hpp"
#include "test_support.hpp"

using namespace gcfib;
using namespace gcfib::testing;

namespace {
AlternatingForm dx(int m, int i) { return AlternatingForm::basis_one_form(m, i); }

AlternatingForm random_form(std::mt19937_64& rng, int m, int degree) {
  std::uniform_real_distribution<double> u(-1, 1);
  AlternatingForm f(m, degree);
  std::vector<int> idx(static_cast<std::size_t>(degree));
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != degree) continue;
    int w = 0;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) idx[w++] = i;
    }
    f.set_coefficient(idx, u(rng));
  }
  return f;
}

bool near(const AlternatingForm& a, const AlternatingForm& b, double tol) {
  AlternatingForm d = a + (-1.0) * b;
  for (const auto& [mask, c] : d.terms()) {
    if (std::abs(c) > tol) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("wedge of one-forms") {
  const AlternatingForm w = wedge(dx(4, 0), dx(4, 1));
  CHECK(w.coefficient({0, 1}) == 1.0);
  CHECK(w.coefficient({1, 0}) == -1.0);
  CHECK(wedge(dx(4, 1), dx(4, 0)).coefficient({0, 1}) == -1.0);
  CHECK(wedge(dx(4, 2), dx(4, 2)).is_zero());
}

TEST_CASE("permutation signs on coefficients") {
  AlternatingForm f(5, 3);
  f.set_coefficient({4, 0, 2}, 2.0);  // (4,0,2) -> (0,2,4) is two transpositions
  CHECK(f.coefficient({0, 2, 4}) == 2.0);
  CHECK(f.coefficient({2, 0, 4}) == -2.0);
  CHECK(f.coefficient({0, 0, 4}) == 0.0);
  CHECK_THROWS_AS(f.set_coefficient({0, 0, 4}, 1.0), ValidationError);
  CHECK_THROWS_AS(f.coefficient({0, 9, 4}), DimensionError);
}

TEST_CASE("graded anticommutativity and associativity") {
  std::mt19937_64 rng(31);
  for (int m = 3; m <= 7; ++m) {
    for (int p = 1; p < m; ++p) {
      for (int q = 1; p + q <= m; ++q) {
        const AlternatingForm f = random_form(rng, m, p);
        const AlternatingForm g = random_form(rng, m, q);
        const double sign = (p * q) % 2 == 0 ? 1.0 : -1.0;
        CHECK(near(wedge(f, g), sign * wedge(g, f), 1e-12));
      }
    }
    const AlternatingForm a = random_form(rng, m, 1);
    const AlternatingForm b = random_form(rng, m, 2);
    const AlternatingForm c = random_form(rng, m, m - 3 >= 0 ? m - 3 : 0);
    CHECK(near(wedge(wedge(a, b), c), wedge(a, wedge(b, c)), 1e-12));
  }
}

TEST_CASE("degree overflow gives the zero form") {
  std::mt19937_64 rng(1);
  const AlternatingForm f = random_form(rng, 3, 2);
  CHECK(wedge(f, f).is_zero());
  CHECK_THROWS_AS(wedge(dx(3, 0), dx(4, 0)), DimensionError);
}

TEST_CASE("powers of the standard symplectic form") {
  // omega = dx0^dx1 + dx2^dx3 + dx4^dx5; omega^n = n! dx0^...^dx5
  SkewMatrix b(6);
  b.set(0, 1, 1);
  b.set(2, 3, 1);
  b.set(4, 5, 1);
  const AlternatingForm omega = bivector_from_skew(b);
  CHECK(power(omega, 1).coefficient({2, 3}) == 1.0);
  CHECK(power(omega, 2).coefficient({0, 1, 4, 5}) == 2.0);
  CHECK(top_coefficient(power(omega, 3)) == 6.0);
  CHECK_THROWS_AS(top_coefficient(power(omega, 2)), DimensionError);
  CHECK_THROWS_AS(power(omega, 0), DomainError);
  CHECK_THROWS_AS(power(dx(6, 0), 2), DimensionError);
}

TEST_CASE("omega^n / n! equals the Pfaffian") {
  std::mt19937_64 rng(32);
  for (int dim = 2; dim <= 8; dim += 2) {
    double fact = 1;
    for (int k = 2; k <= dim / 2; ++k) fact *= k;
    for (int k = 0; k < 10; ++k) {
      const SkewMatrix b = random_skew(rng, dim);
      const double top = top_coefficient(power(bivector_from_skew(b), dim / 2)) / fact;
      const double oracle = pfaffian_permutation_sum(b.dense());
      CHECK(std::abs(top - oracle) <= 1e-9 * std::max(1.0, std::abs(oracle)));
    }
  }
}
