#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "gcfib/matrix.hpp"

namespace gcfib {

/// Constant-coefficient alternating k-form on R^m, i.e. an element of the
/// k-th exterior power of (R^m)^*. Basis k-forms dx_{i1} ^ ... ^ dx_{ik}
/// with i1 < ... < ik are keyed by the bitmask of their (0-based) indices,
/// so the strictly-increasing invariant holds by construction. Absent keys
/// mean coefficient zero. m is limited to 32.
///
/// A degree larger than m is allowed only for the zero form that wedge and
/// power return when the degrees overflow the ambient dimension.
class AlternatingForm {
 public:
  using Mask = std::uint32_t;
  static constexpr int kMaxAmbientDim = 32;

  AlternatingForm(int ambient_dim, int degree);

  /// dx_index, 0-based.
  static AlternatingForm basis_one_form(int ambient_dim, int index);

  int ambient_dim() const { return ambient_dim_; }
  int degree() const { return degree_; }

  /// Coefficient of dx_{i1} ^ ... ^ dx_{ik} for distinct 0-based indices in
  /// any order; the permutation sign is applied. Repeated indices give 0.
  double coefficient(std::span<const int> indices) const;
  double coefficient(std::initializer_list<int> indices) const {
    return coefficient(std::span<const int>(indices.begin(), indices.size()));
  }
  void set_coefficient(std::span<const int> indices, double value);
  void set_coefficient(std::initializer_list<int> indices, double value) {
    set_coefficient(std::span<const int>(indices.begin(), indices.size()), value);
  }

  const std::map<Mask, double>& terms() const { return coeffs_; }
  bool is_zero() const;

  AlternatingForm& operator+=(const AlternatingForm& other);
  friend AlternatingForm operator+(AlternatingForm a, const AlternatingForm& b) { return a += b; }
  friend AlternatingForm operator*(double s, AlternatingForm f);

 private:
  friend AlternatingForm wedge(const AlternatingForm& f, const AlternatingForm& g);

  int ambient_dim_;
  int degree_;
  std::map<Mask, double> coeffs_;
};

/// Exterior product with shuffle signs. Throws DimensionError when the
/// ambient dimensions differ.
AlternatingForm wedge(const AlternatingForm& f, const AlternatingForm& g);

/// n-fold wedge of a 2-form with itself (n >= 1).
AlternatingForm power(const AlternatingForm& f, int n);

/// sum_{i<j} b_ij dx_i ^ dx_j.
AlternatingForm bivector_from_skew(const SkewMatrix& b);

/// Coefficient on dx_0 ^ ... ^ dx_{m-1}; requires degree == ambient_dim.
double top_coefficient(const AlternatingForm& f);

}  // namespace gcfib
