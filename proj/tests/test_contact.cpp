#include <doctest.h>

#include <cmath>
#include <random>

#include "gcfib/contact.hpp"
#include "gcfib/grassmann.hpp"
#include "gcfib/pfaffian.hpp"
#include "test_support.hpp"

using namespace gcfib;
using namespace gcfib::testing;

namespace {
GermSpec f1_equals_x1() {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 1;
  return linear_germ(a);
}

// Entries in [-1, 1] keep sum f^2 < 1 on the default ball for n <= 4.
GermSpec random_linear_germ(std::mt19937_64& rng, int n) {
  return linear_germ(random_matrix(rng, 2 * n, 2 * n));
}

std::vector<GermSpec> all_germs(std::mt19937_64& rng) {
  std::vector<GermSpec> out;
  for (int n = 1; n <= 3; ++n) out.push_back(hopf_germ(n));
  for (int n = 2; n <= 4; ++n) out.push_back(counterexample_germ(n));
  out.push_back(f1_equals_x1());
  out.push_back(linear_germ(Matrix::Zero(4, 4)));
  Polynomial cubic(2, {{Rational(1, 3), {0, 1}}, {Rational(1), {2, 1}}, {Rational(-2), {0, 3}}});
  Polynomial quad(2, {{Rational(-1, 3), {1, 0}}, {Rational(1, 2), {1, 1}}});
  out.emplace_back(1, std::vector<Polynomial>{cubic, quad}, Rational(1, 10));
  for (int k = 0; k < 12; ++k) out.push_back(random_linear_germ(rng, 1 + k % 4));
  return out;
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

// <dS/dt, dS/dx_j> from central differences of circle_point alone.
double alpha_oracle(const GermSpec& g, const Vector& x, double t, int j) {
  const double h = 1e-5;
  const Vector st = (circle_point(g, x, t + h) - circle_point(g, x, t - h)) / (2 * h);
  const Vector e = Vector::Unit(g.dim(), j) * h;
  const Vector sx = (circle_point(g, x + e, t) - circle_point(g, x - e, t)) / (2 * h);
  return st.dot(sx);
}
}  // namespace

TEST_CASE("alpha is dt at the base point") {
  std::mt19937_64 rng(61);
  for (const GermSpec& g : all_germs(rng)) {
    const Vector a = alpha_coefficients(g, Vector::Zero(g.dim()), 0.0);
    CHECK(a.head(g.dim()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(a(g.dim()) == 1.0);
  }
}

TEST_CASE("alpha coefficients are inner products of circle tangents") {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> u(-0.07, 0.07), ut(0, 6.28);
  for (const GermSpec& g : {hopf_germ(1), counterexample_germ(2)}) {
    for (int k = 0; k < 20; ++k) {
      Vector x(g.dim());
      for (int i = 0; i < g.dim(); ++i) x(i) = u(rng) / g.n();
      const double t = ut(rng);
      const Vector a = alpha_coefficients(g, x, t);
      for (int j = 0; j < g.dim(); ++j) CHECK(std::abs(a(j) - alpha_oracle(g, x, t, j)) <= 1e-8);
      // At t = 0 only <Q, P_j> survives.
      const Vector a0 = alpha_coefficients(g, x, 0.0);
      const Matrix pj = p_partials(g, x);
      for (int j = 0; j < g.dim(); ++j) CHECK(std::abs(a0(j) - q_point(g, x).dot(pj.col(j))) <= 1e-15);
    }
  }
}

TEST_CASE("unit-length orthogonality of partials") {
  std::mt19937_64 rng(63);
  std::uniform_real_distribution<double> u(-0.03, 0.03);
  for (const GermSpec& g : all_germs(rng)) {
    Vector x(g.dim());
    for (int i = 0; i < g.dim(); ++i) x(i) = u(rng);
    const Matrix pf = p_partials_fd(g, x), qf = q_partials_fd(g, x);
    const Vector p = base_point(g, x), q = q_point(g, x);
    for (int j = 0; j < g.dim(); ++j) {
      CHECK(std::abs(p.dot(pf.col(j))) <= 1e-8);
      CHECK(std::abs(q.dot(qf.col(j))) <= 1e-8);
    }
  }
}

TEST_CASE("d alpha examples") {
  const AlternatingForm hopf = d_alpha_at_origin(hopf_germ(1));
  CHECK(hopf.coefficient({0, 1}) == 2.0);
  CHECK(top_coefficient(power(d_alpha_at_origin(counterexample_germ(2)), 2)) == 0.0);
  CHECK(d_alpha_at_origin(linear_germ(Matrix::Zero(4, 4))).is_zero());

  // Displayed A - A^T of the n = 2 counterexample.
  Matrix displayed(4, 4);
  displayed << 0, 1, 1, 0, -1, 0, 0, 1, -1, 0, 0, 1, 0, -1, -1, 0;
  CHECK(contact_skew_matrix(counterexample_germ(2)).dense() == displayed);
}

TEST_CASE("contact defect values") {
  for (int n = 1; n <= 4; ++n) {
    const double expect = factorial(n) * std::pow(2.0, n);
    CHECK(rel_err(contact_defect(hopf_germ(n)), expect) <= 1e-9);
  }
  for (int n = 2; n <= 5; ++n) CHECK(contact_defect(counterexample_germ(n)) == 0.0);
}

TEST_CASE("exterior and matrix routes agree") {
  std::mt19937_64 rng(64);
  for (const GermSpec& g : all_germs(rng)) {
    const SkewMatrix b = contact_skew_matrix(g);
    const double via_matrix = factorial(g.n()) * pfaffian(b);
    const double scale = factorial(g.n()) * std::max(1.0, std::pow(b.infinity_norm(), g.n()));
    CHECK(std::abs(contact_defect(g) - via_matrix) <= 1e-9 * scale);
    CHECK(std::abs(pfaffian_permutation_sum(b.dense()) - pfaffian(b)) <= 1e-10 * scale);
  }
}

TEST_CASE("analyze verdicts") {
  const ContactReport hopf = analyze(hopf_germ(1));
  CHECK(hopf.is_local_fibration);
  CHECK(hopf.is_contact_at_origin);
  CHECK(hopf.pfaffian_value == doctest::Approx(2.0));

  const ContactReport ce = analyze(counterexample_germ(2));
  CHECK(ce.is_local_fibration);
  CHECK_FALSE(ce.is_contact_at_origin);
  CHECK(ce.is_non_contact_fibration());
  CHECK(ce.pfaffian_value == 0.0);

  const ContactReport bad = analyze(f1_equals_x1());
  CHECK_FALSE(bad.is_local_fibration);
  int real = 0;
  for (const auto& l : bad.eigenvalues) real += std::abs(l.imag()) <= 1e-12;
  CHECK(real == 2);
  CHECK(bad.eigenvalues.front().real() == doctest::Approx(0.0));
  CHECK(bad.eigenvalues.back().real() == doctest::Approx(1.0));
}

TEST_CASE("finite-difference d alpha and the alpha-prime check") {
  std::mt19937_64 rng(65);
  for (const GermSpec& g : all_germs(rng)) {
    CHECK(validate_d_alpha_fd(g) <= 1e-6);
    CHECK(alpha_prime_check(g));
  }
  CHECK(validate_d_alpha_fd(linear_germ(Matrix::Zero(2, 2))) <= 1e-10);
}

TEST_CASE("no 2x2 twisting matrix without real eigenvalues is non-contact") {
  std::mt19937_64 rng(66);
  int fibrations = 0;
  for (int k = 0; k < 10000; ++k) {
    const Matrix a = random_matrix(rng, 2, 2);
    if (has_real_eigenvalue(a)) continue;
    ++fibrations;
    const SkewMatrix b = SkewMatrix::skew_part(a.transpose());
    CHECK(a(0, 1) * a(1, 0) < 0);
    CHECK(determinant(b.dense()) == doctest::Approx((a(0, 1) - a(1, 0)) * (a(0, 1) - a(1, 0))));
    CHECK(std::abs(pfaffian(b)) > contact_tolerance(b));
  }
  CHECK(fibrations > 1000);
}

TEST_CASE("bridge to the chart transversality test") {
  std::mt19937_64 rng(67);
  for (const GermSpec& g : all_germs(rng)) {
    const auto t = transverse_to_bad_cone(tangent_basis_from_twisting(twisting_matrix(g)));
    CHECK(t.transverse == is_local_fibration(g));
  }
}
