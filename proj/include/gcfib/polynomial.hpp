#pragma once

#include <vector>

#include "gcfib/matrix.hpp"
#include "gcfib/scalar.hpp"

namespace gcfib {

/// Twist functions are polynomials of total degree at most this.
inline constexpr int kMaxPolynomialDegree = 3;

struct Monomial {
  Scalar coefficient;
  std::vector<int> exponents;  // one per variable

  int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Polynomial in a fixed number of variables, stored as its terms in input
/// order (like terms are not merged, so files round-trip unchanged).
class Polynomial {
 public:
  explicit Polynomial(int variables, std::vector<Monomial> terms = {});

  /// sum_j coefficients[j] * x_j.
  static Polynomial linear(const std::vector<Scalar>& coefficients);

  int variables() const { return variables_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  int degree() const;

  double operator()(const Vector& x) const;
  Vector gradient(const Vector& x) const;

  /// Exact value at the origin (sum of constant terms), as a double.
  double constant_term() const;

  /// Coefficient of x_j in the linear part: the partial derivative at 0.
  double linear_coefficient(int j) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int variables_;
  std::vector<Monomial> terms_;
};

}  // namespace gcfib
