#include "gcfib/contact.hpp"

#include <algorithm>
#include <cmath>

#include "gcfib/pfaffian.hpp"

namespace gcfib {
namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

Vector alpha_coefficients(const GermSpec& g, const Vector& x, double t) {
  const Vector p = base_point(g, x);
  const Vector q = q_point(g, x);
  const Matrix pj = p_partials(g, x);
  const Matrix qj = q_partials(g, x);
  const double s2 = std::sin(t) * std::sin(t);
  const double c2 = std::cos(t) * std::cos(t);
  Vector a(g.dim() + 1);
  for (int j = 0; j < g.dim(); ++j) a(j) = -p.dot(qj.col(j)) * s2 + q.dot(pj.col(j)) * c2;
  a(g.dim()) = 1.0;
  return a;
}

SkewMatrix contact_skew_matrix(const GermSpec& g) {
  return SkewMatrix::skew_part(twisting_matrix(g).transpose());
}

AlternatingForm d_alpha_at_origin(const GermSpec& g) {
  return bivector_from_skew(contact_skew_matrix(g));
}

double contact_defect(const GermSpec& g) {
  return top_coefficient(power(d_alpha_at_origin(g), g.n()));
}

double contact_tolerance(const SkewMatrix& b) {
  return 1e-9 * std::max(1.0, std::pow(b.infinity_norm(), b.half_dim()));
}

ContactReport analyze(const GermSpec& g) {
  ContactReport r;
  r.n = g.n();
  r.twisting = twisting_matrix(g);
  r.eigenvalues = eigenvalues(r.twisting);
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() > b.imag();
  });
  r.is_local_fibration = !has_real_eigenvalue(r.twisting);
  r.skew_part = contact_skew_matrix(g);
  r.pfaffian_value = pfaffian(r.skew_part);
  r.contact_defect = factorial(g.n()) * r.pfaffian_value;
  r.contact_tolerance = contact_tolerance(r.skew_part);
  r.is_contact_at_origin = std::abs(r.pfaffian_value) > r.contact_tolerance;
  return r;
}

double validate_d_alpha_fd(const GermSpec& g, double step) {
  const int d = g.dim();
  const Vector origin = Vector::Zero(d);
  // da(k, j) = d a_k / d x_j at the origin, t = 0.
  Matrix da(d, d);
  for (int j = 0; j < d; ++j) {
    const Vector e = step * Vector::Unit(d, j);
    da.col(j) = (alpha_coefficients(g, e, 0.0) - alpha_coefficients(g, -e, 0.0)).head(d) / (2.0 * step);
  }
  const Vector dt = (alpha_coefficients(g, origin, step) - alpha_coefficients(g, origin, -step)).head(d) /
                    (2.0 * step);

  const AlternatingForm closed = d_alpha_at_origin(g);
  double worst = dt.cwiseAbs().maxCoeff();
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      const double fd = da(k, j) - da(j, k);
      worst = std::max(worst, std::abs(fd - closed.coefficient({j, k})));
    }
  }
  return worst;
}

bool alpha_prime_check(const GermSpec& g) {
  constexpr double kTol = 1e-10;
  const int d = g.dim();
  const Vector origin = Vector::Zero(d);
  if (g.twist_values(origin).cwiseAbs().maxCoeff() > kTol) return false;

  // jac(k, j) = d f_k / d x_j from the polynomial gradients.
  const Matrix jac = g.twist_jacobian(origin);
  AlternatingForm d_alpha_prime(d, 2);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) d_alpha_prime.set_coefficient({j, k}, jac(k, j) - jac(j, k));
  }
  const AlternatingForm d_alpha = d_alpha_at_origin(g);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      if (std::abs(d_alpha_prime.coefficient({j, k}) - d_alpha.coefficient({j, k})) > kTol) return false;
    }
  }
  return true;
}

}  // namespace gcfib
