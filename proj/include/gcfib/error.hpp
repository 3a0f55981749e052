#pragma once

#include <stdexcept>
#include <string>

namespace gcfib {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatch: non-square input, odd Pfaffian dimension, wrong ambient size.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// The factorial-cost Pfaffian path refuses large matrices.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// A point lies outside the region where a formula is defined (e.g. |x| >= 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Structural precondition violated: non-orthonormal frame, non-skew input,
// dependent basis.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A plane outside N(P): it contains a vector orthogonal to P or its
// projection to P reverses orientation.
class ChartDomainError : public Error {
 public:
  using Error::Error;
};

// Twisting data that cannot describe a great-circle family (f_i(0) != 0 or
// sum f_i^2 >= 1 somewhere on the ball).
class GermValidityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace gcfib
