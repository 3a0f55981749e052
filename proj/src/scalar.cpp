#include "gcfib/scalar.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <system_error>

#include "gcfib/error.hpp"

namespace gcfib {
namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < -static_cast<Wide>(INT64_MAX)) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Reduced {
  std::int64_t num;
  std::int64_t den;
};

Reduced reduce(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {narrow(num), narrow(den)};
}

Rational make_reduced(Wide num, Wide den) {
  Reduced r = reduce(num, den);
  return Rational(r.num, r.den);
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::optional<std::int64_t> parse_integer(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Decimal literal [+-]digits[.digits][(e|E)[+-]digits] as an exact rational,
// or nullopt if it does not fit. Throws on malformed text.
std::optional<Rational> parse_decimal_exact(std::string_view s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  Wide mantissa = 0;
  bool overflow = false;
  int digits = 0;
  int fraction_digits = 0;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_point) throw ParseError(0, "malformed number '" + std::string(s) + "'");
      seen_point = true;
      continue;
    }
    if (!is_digit(c)) break;
    ++digits;
    if (seen_point) ++fraction_digits;
    mantissa = mantissa * 10 + (c - '0');
    if (mantissa > INT64_MAX) overflow = true;
  }
  if (digits == 0) throw ParseError(0, "malformed number '" + std::string(s) + "'");
  long exponent = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    std::string_view digits_part = s.substr(i + 1);
    if (!digits_part.empty() && digits_part.front() == '+') digits_part.remove_prefix(1);
    auto e = parse_integer(digits_part);
    if (!e) throw ParseError(0, "malformed exponent in '" + std::string(s) + "'");
    if (*e > 10000 || *e < -10000) return std::nullopt;
    exponent = static_cast<long>(*e);
    i = s.size();
  }
  if (i != s.size()) throw ParseError(0, "malformed number '" + std::string(s) + "'");
  if (overflow) return std::nullopt;

  long scale = exponent - fraction_digits;
  if (scale > 18 || scale < -18) return std::nullopt;
  Wide pow10 = 1;
  for (long k = 0; k < std::labs(scale); ++k) pow10 *= 10;
  Wide num = negative ? -mantissa : mantissa;
  Wide den = 1;
  if (scale >= 0) {
    num *= pow10;
    if (num > INT64_MAX || num < -static_cast<Wide>(INT64_MAX)) return std::nullopt;
  } else {
    den = pow10;
  }
  return make_reduced(num, den);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  Reduced r = reduce(num, den);
  num_ = r.num;
  den_ = r.den;
}

double Rational::to_double() const {
  constexpr std::int64_t kExact = std::int64_t{1} << 53;
  if (num_ <= kExact && num_ >= -kExact && den_ <= kExact) {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  // Decimal denominators (the common case for long literals): let
  // from_chars do the correctly rounded conversion.
  int exponent = 0;
  std::int64_t d = den_;
  while (d % 10 == 0) {
    d /= 10;
    ++exponent;
  }
  if (d == 1) {
    const std::string text = std::to_string(num_) + "e-" + std::to_string(exponent);
    double v = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), v);
    return v;
  }
  return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make_reduced(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make_reduced(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  return make_reduced(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Scalar Scalar::parse(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = parse_integer(text.substr(0, slash));
    auto q = parse_integer(text.substr(slash + 1));
    if (!p || !q) throw ParseError(0, "malformed fraction '" + std::string(text) + "'");
    if (*q <= 0) throw ParseError(0, "fraction needs a positive denominator: '" + std::string(text) + "'");
    return Scalar(Rational(*p, *q));
  }
  if (auto exact = parse_decimal_exact(text)) return Scalar(*exact);
  double v = 0.0;
  auto first = text.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ParseError(0, "number out of range '" + std::string(text) + "'");
  }
  return Scalar(v);
}

double Scalar::value() const {
  if (exact()) return rational().to_double();
  return std::get<double>(value_);
}

std::string Scalar::to_string() const {
  if (exact()) return rational().to_string();
  return format_double(std::get<double>(value_));
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace gcfib
