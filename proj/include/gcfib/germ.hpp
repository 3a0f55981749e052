#pragma once

#include <vector>

#include "gcfib/matrix.hpp"
#include "gcfib/polynomial.hpp"
#include "gcfib/scalar.hpp"

namespace gcfib {

/// Step for central differences wherever a derivative is differenced.
inline constexpr double kFdStep = 1e-4;
/// Number of quasi-random ball samples used to check that h stays real.
inline constexpr int kValiditySamples = 1000;

/// Twisting data for a family of great circles around the base fibre P
/// through U1 = e_0 and U2 = e_1 in R^{2n+2}; V_j = e_{j+2}.
///
/// The circle through P(x) also passes through
///   Q(x) = h(x) U2 + sum_i f_i(x) V_i(x),  h = sqrt(1 - sum f_i^2),
/// where V_i(x) is V_i parallel-transported from U1 to P(x).
class GermSpec {
 public:
  /// Validates: n >= 1, 2n polynomials in 2n variables, f_i(0) = 0,
  /// 0 < radius < 1, and sum f_i^2 < 1 on kValiditySamples points of the
  /// closed ball of that radius. Throws GermValidityError otherwise.
  GermSpec(int n, std::vector<Polynomial> twist_functions, Scalar domain_radius);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  int ambient_dim() const { return 2 * n_ + 2; }
  const std::vector<Polynomial>& twist_functions() const { return twist_; }
  double domain_radius() const { return radius_.value(); }
  const Scalar& domain_radius_exact() const { return radius_; }

  /// (f_1(x), ..., f_2n(x)).
  Vector twist_values(const Vector& x) const;
  /// Jacobian (df_i/dx_j)(x), rows indexed by function.
  Matrix twist_jacobian(const Vector& x) const;

  friend bool operator==(const GermSpec&, const GermSpec&) = default;

 private:
  int n_;
  std::vector<Polynomial> twist_;
  Scalar radius_;
};

/// Parallel-transported frame at P(x); columns are U1(x) = P(x), U2,
/// V_1(x), ..., V_2n(x).
struct Frame {
  Vector x;
  Matrix vectors;

  auto u1() const { return vectors.col(0); }
  auto u2() const { return vectors.col(1); }
  auto v(int j) const { return vectors.col(j + 2); }
};

/// P(x) = (sqrt(1 - |x|^2), 0, x_1, ..., x_2n). Throws DomainError if |x| >= 1.
Vector base_point(const GermSpec& g, const Vector& x);

/// Transport along the great arc from U1 to P(x): with c = sqrt(1 - |x|^2)
/// and X = sum x_k V_k,  V_i(x) = V_i - x_i U1 - x_i X / (1 + c).
Frame frame_at(const GermSpec& g, const Vector& x);

/// Q(x); throws GermValidityError if sum f_i(x)^2 >= 1.
Vector q_point(const GermSpec& g, const Vector& x);

/// S(x, t) = P(x) cos t + Q(x) sin t.
Vector circle_point(const GermSpec& g, const Vector& x, double t);

/// Columns are dP/dx_j (resp. dQ/dx_j) at x, evaluated in closed form.
Matrix p_partials(const GermSpec& g, const Vector& x);
Matrix q_partials(const GermSpec& g, const Vector& x);

/// Central-difference versions of the above, for cross-checks.
Matrix p_partials_fd(const GermSpec& g, const Vector& x, double step = kFdStep);
Matrix q_partials_fd(const GermSpec& g, const Vector& x, double step = kFdStep);

/// (df_i/dx_j)(0), rows indexed by function i, read from the linear
/// coefficients.
Matrix twisting_matrix(const GermSpec& g);
Matrix twisting_matrix_fd(const GermSpec& g, double step = kFdStep);

/// The circles fibre a neighborhood of P iff the twisting matrix has no real
/// eigenvalue.
bool is_local_fibration(const GermSpec& g);

/// Circles of the Hopf fibration (complex lines for the complex structure
/// pairing coordinates (0,1), (2,3), ...): f_{2k-1} = -x_{2k}, f_{2k} = x_{2k-1}.
GermSpec hopf_germ(int n, Scalar domain_radius = Rational(1, 10));

/// Standard orthogonal complex structure on R^{2n+2}: (a, b) -> (-b, a) on
/// each coordinate pair.
Matrix complex_structure(int ambient_dim);

/// 2n x 2n matrix with n diagonal blocks [[0, 1/2], [-1/2, 0]] plus the
/// identity in the upper-right 2x2 corner. It has no real eigenvalue while
/// D - D^T is singular for every n >= 2.
Matrix counterexample_matrix(int n);

/// Linear germ whose twisting matrix is counterexample_matrix(n)^T, i.e.
/// df_i/dx_j(0) = D(j, i). Throws DomainError for n < 2: every 2x2 matrix
/// without real eigenvalues has A - A^T nonsingular.
GermSpec counterexample_germ(int n, Scalar domain_radius = Rational(1, 10));

/// Linear germ with the given twisting matrix (exact if the entries are).
GermSpec linear_germ(const std::vector<std::vector<Scalar>>& twisting, Scalar domain_radius = Rational(1, 10));
GermSpec linear_germ(const Matrix& twisting, Scalar domain_radius = Rational(1, 10));

struct CircleSearch {
  int grid = 64;
  int descent_steps = 20;
};

/// min over (t, s) of |S(x1, t) - S(x2, s)|: coarse grid over [0, 2pi)^2 then
/// coordinate descent with a halving step. Deterministic.
double circle_min_distance(const GermSpec& g, const Vector& x1, const Vector& x2,
                           const CircleSearch& search = {});

}  // namespace gcfib
