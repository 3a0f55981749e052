#pragma once

#include <string>
#include <string_view>

#include "gcfib/germ.hpp"

namespace gcfib {

/// Germ file format, one record per line ('#' comments and blank lines are
/// ignored):
///
///   n 2
///   domain_radius 1/10
///   term 1 -1/2 0 1 0 0
///
/// `term i c e_1 ... e_2n` adds c * x_1^e_1 ... x_2n^e_2n to f_i (1-based i).
/// Coefficients are decimals or exact fractions "p/q". Functions without
/// terms are identically zero. `n` must precede the terms.
GermSpec parse_germ(std::string_view text);
GermSpec read_germ_file(const std::string& path);

/// Canonical text: header comment, n, domain_radius, then the terms of f_1,
/// f_2, ... in stored order. Exact coefficients are written as fractions, so
/// parse_germ(format_germ(g)) == g for exact germs.
std::string format_germ(const GermSpec& g);
void write_germ_file(const GermSpec& g, const std::string& path);

}  // namespace gcfib
