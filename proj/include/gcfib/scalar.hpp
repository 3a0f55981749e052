#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace gcfib {

/// Exact rational with 64-bit numerator and denominator, always normalized
/// (den > 0, gcd(num, den) == 1). Arithmetic throws std::overflow_error
/// rather than wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const;
  bool is_zero() const { return num_ == 0; }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A coefficient read from an input file. Decimal literals and "p/q"
/// fractions are kept exact whenever they fit in a Rational; anything else
/// (huge exponents, too many digits) falls back to the nearest double.
/// Printing an exact scalar reproduces it bit-for-bit on re-parse.
class Scalar {
 public:
  Scalar() : value_(Rational{}) {}
  Scalar(Rational r) : value_(r) {}
  explicit Scalar(double d) : value_(d) {}

  /// Throws ParseError (line 0) on malformed text.
  static Scalar parse(std::string_view text);

  bool exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  double value() const;
  std::string to_string() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  std::variant<Rational, double> value_;
};

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double v);

}  // namespace gcfib
