#pragma once

#include <optional>
#include <vector>

#include "gcfib/matrix.hpp"

namespace gcfib {

/// Singular values below this fraction of the largest one count as zero.
inline constexpr double kRankTol = 1e-9;
/// Orthonormality tolerance for planes and frames.
inline constexpr double kOrthoTol = 1e-12;

/// Oriented 2-plane through the origin of R^m, held as an ordered
/// orthonormal basis.
class OrientedPlane {
 public:
  /// Throws ValidationError unless (first, second) is orthonormal to kOrthoTol.
  OrientedPlane(Vector first, Vector second);

  /// Gram-Schmidt on (a, b), keeping the order; throws ValidationError if
  /// the vectors are dependent.
  static OrientedPlane orthonormalized(const Vector& a, const Vector& b);

  /// span(e_0, e_1) in R^m.
  static OrientedPlane coordinate(int ambient_dim);

  int ambient_dim() const { return static_cast<int>(first_.size()); }
  const Vector& first() const { return first_; }
  const Vector& second() const { return second_; }

  /// m x 2 matrix with the basis as columns.
  Matrix basis() const;

 private:
  Vector first_;
  Vector second_;
};

/// Element of Hom(P, P^perp) as a 2n x 2 matrix: column 0 is the image of
/// the first basis vector of P, column 1 the image of the second, both in
/// the coordinates of a chosen orthonormal frame of P^perp.
class HomElement {
 public:
  explicit HomElement(Matrix m);

  int n() const { return static_cast<int>(matrix_.rows() / 2); }
  const Matrix& matrix() const { return matrix_; }
  auto first_column() const { return matrix_.col(0); }
  auto second_column() const { return matrix_.col(1); }

 private:
  Matrix matrix_;
};

/// 2n-dimensional subspace of Hom(P, P^perp) given by 2n independent elements.
class TangentSubspace {
 public:
  /// Throws ValidationError if the count is not 2n or the elements are
  /// dependent as vectors of R^{4n}.
  explicit TangentSubspace(std::vector<HomElement> basis);

  int n() const { return basis_.front().n(); }
  const std::vector<HomElement>& basis() const { return basis_; }

  /// 2n x 2n matrices whose j-th columns are the first/second columns of
  /// basis element j.
  Matrix first_parts() const;
  Matrix second_parts() const;

 private:
  std::vector<HomElement> basis_;
};

/// Orthonormal basis of P^perp (as m x (m-2) columns) oriented so that
/// P's basis followed by it is a positive basis of R^m.
Matrix complement_frame(const OrientedPlane& p);

/// Throws ValidationError unless `frame` is an orthonormal, positively
/// oriented basis of P^perp.
void validate_frame(const OrientedPlane& p, const Matrix& frame);

/// The plane spanned by u1 + L(u1), u2 + L(u2), orthonormalized in order.
OrientedPlane graph_plane(const OrientedPlane& p, const HomElement& l, const Matrix& frame);

/// The unique L whose graph is `q`. Throws ChartDomainError when q's
/// projection to P is singular or orientation-reversing.
HomElement plane_to_hom(const OrientedPlane& p, const OrientedPlane& q, const Matrix& frame);

/// True iff P and Q share at least a line: their stacked 4 x m basis
/// matrix has a singular value at most kRankTol times the largest.
bool in_bad_set(const OrientedPlane& p, const OrientedPlane& q);

struct TransversalityResult {
  bool transverse = false;
  /// The map from the first column space to the second whose graph is T,
  /// present when T meets neither column space.
  std::optional<Matrix> map;
};

/// Transversality of T to the bad cone at P: T must meet both column spaces
/// only in 0, and the map M with T = graph(M) must have no real eigenvalue.
TransversalityResult transverse_to_bad_cone(const TangentSubspace& t);

/// Tangent vectors dT/dx_j at the base fibre: first column e_j, second
/// column the j-th column of the twisting matrix.
TangentSubspace tangent_basis_from_twisting(const Matrix& a);

/// Numerical rank with relative threshold kRankTol.
int numerical_rank(const Matrix& m);

}  // namespace gcfib
