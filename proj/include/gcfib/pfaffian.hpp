#pragma once

#include <array>
#include <functional>
#include <vector>

#include "gcfib/error.hpp"
#include "gcfib/matrix.hpp"

namespace gcfib {

/// Largest dimension accepted by the matching expansion (7!! = 105 terms).
inline constexpr int kMaxCombinatorialDim = 8;

/// Pfaffian as a signed sum over perfect matchings of {0..dim-1}:
/// expand along the lowest free index i, pairing it with each free j with
/// sign (-1)^(number of free indices strictly between i and j). Each matching
/// stands for the 2^n n! permutations in the full symmetric-group sum that
/// produce the same product, so no normalizing factor appears.
///
/// `entry(i, j)` must return b_ij for i < j. Works for any field-like T
/// (double, Rational).
template <class T>
T pfaffian_by_matchings(int dim, const std::function<T(int, int)>& entry) {
  if (dim <= 0 || dim % 2 != 0) {
    throw DimensionError("Pfaffian needs an even positive dimension, got " + std::to_string(dim));
  }
  if (dim > kMaxCombinatorialDim) {
    throw SizeLimitError("combinatorial Pfaffian is limited to dimension " +
                         std::to_string(kMaxCombinatorialDim) + "; use pfaffian_normal_form for " +
                         std::to_string(dim));
  }
  std::array<int, kMaxCombinatorialDim> free{};
  for (int i = 0; i < dim; ++i) free[i] = i;

  std::function<T(int)> expand = [&](int count) -> T {
    if (count == 0) return T(1);
    const int first = free[0];
    T total(0);
    for (int k = 1; k < count; ++k) {
      const int partner = free[k];
      std::array<int, kMaxCombinatorialDim> saved = free;
      int w = 0;
      for (int r = 1; r < count; ++r) {
        if (r != k) free[w++] = saved[r];
      }
      T term = entry(first, partner) * expand(count - 2);
      free = saved;
      if ((k - 1) % 2 == 0) {
        total = total + term;
      } else {
        total = total - term;
      }
    }
    return total;
  };
  return expand(dim);
}

/// Matching-sum Pfaffian; dim <= kMaxCombinatorialDim.
double pfaffian_combinatorial(const SkewMatrix& b);

/// Orthogonal normal form: rotation * B * rotation^T is block diagonal with
/// blocks [[0, b_k], [-b_k, 0]], b_k >= 0.
struct SkewNormalForm {
  Matrix rotation;
  std::vector<double> block_values;
  int rotation_det_sign = 1;

  /// The block-diagonal matrix assembled from block_values.
  Matrix block_matrix() const;
};

SkewNormalForm skew_normal_form(const SkewMatrix& b);

/// rotation_det_sign * prod(block_values); any even dimension.
double pfaffian_normal_form(const SkewMatrix& b);

/// Dispatches to the matching sum for small matrices, normal form otherwise.
double pfaffian(const SkewMatrix& b);

}  // namespace gcfib
