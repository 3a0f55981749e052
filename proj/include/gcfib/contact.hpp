#pragma once

#include <complex>
#include <vector>

#include "gcfib/exterior.hpp"
#include "gcfib/germ.hpp"
#include "gcfib/matrix.hpp"

namespace gcfib {

/// Verdicts for one germ at the base point x = 0, t = 0, with witnesses.
///
/// skew_part is B with b_jk = df_k/dx_j - df_j/dx_k, i.e. B = A^T - A for
/// the twisting matrix A (rows = functions). At the base point
/// (d alpha)^n = n! Pf(B) dx_1 ^ ... ^ dx_2n, and contact_defect is that
/// coefficient.
struct ContactReport {
  int n = 0;
  Matrix twisting;
  std::vector<std::complex<double>> eigenvalues;
  SkewMatrix skew_part{2};
  double pfaffian_value = 0.0;
  double contact_defect = 0.0;
  double contact_tolerance = 0.0;
  bool is_local_fibration = false;
  bool is_contact_at_origin = false;

  /// Local fibration whose orthogonal distribution is not contact at P.
  bool is_non_contact_fibration() const { return is_local_fibration && !is_contact_at_origin; }
};

/// Coefficients (a_1, ..., a_2n, 1) of alpha = sum a_j dx_j + dt at (x, t),
/// a_j = -<P, Q_j> sin^2 t + <Q, P_j> cos^2 t, using closed-form partials.
Vector alpha_coefficients(const GermSpec& g, const Vector& x, double t);

/// d alpha at x = 0, t = 0 restricted to the x-directions:
/// sum_{j<k} (df_k/dx_j - df_j/dx_k)(0) dx_j ^ dx_k. (The dx ^ dt part
/// vanishes there.)
AlternatingForm d_alpha_at_origin(const GermSpec& g);

/// B = A^T - A as above.
SkewMatrix contact_skew_matrix(const GermSpec& g);

/// Top coefficient of (d alpha)^n at the base point.
double contact_defect(const GermSpec& g);

/// 1e-9 * max(1, |B|_inf^n).
double contact_tolerance(const SkewMatrix& b);

ContactReport analyze(const GermSpec& g);

/// Differences the coefficients a_j in x and t (central, `step`) to get d
/// alpha at the origin and returns the largest deviation from
/// d_alpha_at_origin, including the dx_j ^ dt components (which should be 0).
double validate_d_alpha_fd(const GermSpec& g, double step = kFdStep);

/// alpha' = sum f_k dx_k + dt: checks alpha' = dt at x = 0 and
/// d alpha' = d alpha at the origin, both to 1e-10. d alpha' is built from
/// the gradients of the twist polynomials, d alpha from the twisting matrix.
bool alpha_prime_check(const GermSpec& g);

}  // namespace gcfib
