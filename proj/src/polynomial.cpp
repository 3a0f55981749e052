#include "gcfib/polynomial.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "gcfib/error.hpp"

namespace gcfib {
namespace {

double power_int(double base, int e) {
  double r = 1.0;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

}  // namespace

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

Polynomial::Polynomial(int variables, std::vector<Monomial> terms)
    : variables_(variables), terms_(std::move(terms)) {
  if (variables < 1) throw DimensionError("polynomial needs at least one variable");
  for (const auto& t : terms_) {
    if (static_cast<int>(t.exponents.size()) != variables_) {
      throw DimensionError("monomial has " + std::to_string(t.exponents.size()) +
                           " exponents, expected " + std::to_string(variables_));
    }
    for (int e : t.exponents) {
      if (e < 0) throw ValidationError("negative exponent in monomial");
    }
    if (t.degree() > kMaxPolynomialDegree) {
      throw ValidationError("monomial degree " + std::to_string(t.degree()) + " exceeds " +
                            std::to_string(kMaxPolynomialDegree));
    }
  }
}

Polynomial Polynomial::linear(const std::vector<Scalar>& coefficients) {
  const int vars = static_cast<int>(coefficients.size());
  std::vector<Monomial> terms;
  for (int j = 0; j < vars; ++j) {
    if (coefficients[j].exact() && coefficients[j].rational().is_zero()) continue;
    if (!coefficients[j].exact() && coefficients[j].value() == 0.0) continue;
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    e[j] = 1;
    terms.push_back({coefficients[j], std::move(e)});
  }
  return Polynomial(vars, std::move(terms));
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.degree());
  return d;
}

double Polynomial::operator()(const Vector& x) const {
  if (x.size() != variables_) throw DimensionError("polynomial evaluated at a point of wrong size");
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coefficient.value();
    for (int j = 0; j < variables_; ++j) v *= power_int(x(j), t.exponents[j]);
    sum += v;
  }
  return sum;
}

Vector Polynomial::gradient(const Vector& x) const {
  if (x.size() != variables_) throw DimensionError("polynomial gradient at a point of wrong size");
  Vector g = Vector::Zero(variables_);
  for (const auto& t : terms_) {
    for (int j = 0; j < variables_; ++j) {
      if (t.exponents[j] == 0) continue;
      double v = t.coefficient.value() * t.exponents[j];
      for (int k = 0; k < variables_; ++k) {
        v *= power_int(x(k), t.exponents[k] - (k == j ? 1 : 0));
      }
      g(j) += v;
    }
  }
  return g;
}

double Polynomial::constant_term() const {
  double c = 0.0;
  for (const auto& t : terms_) {
    if (t.degree() == 0) c += t.coefficient.value();
  }
  return c;
}

double Polynomial::linear_coefficient(int j) const {
  double c = 0.0;
  for (const auto& t : terms_) {
    if (t.degree() == 1 && t.exponents[j] == 1) c += t.coefficient.value();
  }
  return c;
}

}  // namespace gcfib
