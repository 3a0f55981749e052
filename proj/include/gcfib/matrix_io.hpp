#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gcfib/matrix.hpp"
#include "gcfib/scalar.hpp"

namespace gcfib {

/// Matrix as read from text, entries kept exact where possible.
///
/// Text format: one row per line, entries separated by whitespace, each a
/// decimal literal or a fraction "p/q". Blank lines and lines whose first
/// non-blank character is '#' are ignored.
struct ScalarMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> entries;  // row-major

  const Scalar& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
  bool all_exact() const;
  Matrix to_matrix() const;
};

/// Throws ParseError carrying the 1-based line number.
ScalarMatrix parse_matrix(std::string_view text);
ScalarMatrix read_matrix_file(const std::string& path);

/// Rows of shortest round-trip decimals, one per line, each line ending in '\n'.
std::string format_matrix(const Matrix& m);

/// Exact skew check on rational entries: throws ValidationError naming the
/// first pair (1-based) with b_ij != -b_ji.
void require_exactly_skew(const ScalarMatrix& m);

}  // namespace gcfib
