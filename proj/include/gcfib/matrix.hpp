#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace gcfib {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Eigenvalues whose imaginary part is at most this fraction of (1 + |lambda|)
/// count as real.
inline constexpr double kRealnessTol = 1e-9;

/// Throws DimensionError unless `a` is square and non-empty, and
/// ValidationError if any entry is not finite.
void require_square(const Matrix& a, const char* what);

/// Eigenvalues from a dense real eigensolver, in solver order.
std::vector<std::complex<double>> eigenvalues(const Matrix& a);

/// True iff some eigenvalue satisfies |Im l| <= kRealnessTol * (1 + |l|).
bool has_real_eigenvalue(const Matrix& a);

/// Closed-form test for 2x2 matrices: no real eigenvalues exactly when
/// (a11 - a22)^2 < -4 a12 a21.
bool no_real_eigs_2x2_criterion(const Matrix& a);

/// LU with partial pivoting.
double determinant(const Matrix& a);

/// Block-diagonal matrix with the given square blocks down the diagonal.
Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// Skew-symmetric matrix of even dimension, stored as its strict upper
/// triangle so that B^T = -B holds exactly.
class SkewMatrix {
 public:
  /// Zero matrix of dimension `dim` (even, >= 2).
  explicit SkewMatrix(int dim);

  /// Row-major strict upper triangle: b01, b02, ..., b0(m-1), b12, ...
  static SkewMatrix from_upper(int dim, const std::vector<double>& upper);

  /// Accepts a dense matrix whose skew defect |b_ij + b_ji| (and |b_ii|) is
  /// at most `tol`; otherwise throws ValidationError naming the first
  /// offending entry pair (1-based). The upper triangle is kept.
  static SkewMatrix from_dense(const Matrix& b, double tol = 0.0);

  /// A - A^T for square A of even size.
  static SkewMatrix skew_part(const Matrix& a);

  int dim() const { return dim_; }
  int half_dim() const { return dim_ / 2; }

  /// Entry (i, j), 0-based; antisymmetric by construction.
  double operator()(int i, int j) const;
  void set(int i, int j, double value);

  Matrix dense() const;

  /// Largest absolute row sum.
  double infinity_norm() const;

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  std::size_t index(int i, int j) const;

  int dim_;
  std::vector<double> upper_;
};

}  // namespace gcfib
