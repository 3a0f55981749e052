#include "gcfib/grassmann.hpp"

#include <cmath>
#include <string>

#include "gcfib/error.hpp"

namespace gcfib {

OrientedPlane::OrientedPlane(Vector first, Vector second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_.size() != second_.size() || first_.size() < 3) {
    throw DimensionError("plane basis vectors must share an ambient dimension >= 3");
  }
  if (std::abs(first_.norm() - 1.0) > kOrthoTol || std::abs(second_.norm() - 1.0) > kOrthoTol ||
      std::abs(first_.dot(second_)) > kOrthoTol) {
    throw ValidationError("plane basis is not orthonormal");
  }
}

OrientedPlane OrientedPlane::orthonormalized(const Vector& a, const Vector& b) {
  const double na = a.norm();
  if (!(na > 0.0)) throw ValidationError("plane spanning vectors are dependent");
  Vector first = a / na;
  Vector second = b - first.dot(b) * first;
  second -= first.dot(second) * first;
  const double nb = second.norm();
  if (!(nb > kRankTol * std::max(1.0, b.norm()))) {
    throw ValidationError("plane spanning vectors are dependent");
  }
  return OrientedPlane(std::move(first), second / nb);
}

OrientedPlane OrientedPlane::coordinate(int ambient_dim) {
  return OrientedPlane(Vector::Unit(ambient_dim, 0), Vector::Unit(ambient_dim, 1));
}

Matrix OrientedPlane::basis() const {
  Matrix b(ambient_dim(), 2);
  b.col(0) = first_;
  b.col(1) = second_;
  return b;
}

HomElement::HomElement(Matrix m) : matrix_(std::move(m)) {
  if (matrix_.cols() != 2 || matrix_.rows() < 2 || matrix_.rows() % 2 != 0) {
    throw DimensionError("Hom(P, P^perp) elements are 2n x 2 matrices, got " +
                         std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
  }
}

TangentSubspace::TangentSubspace(std::vector<HomElement> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) throw ValidationError("tangent subspace needs a basis");
  const int n = basis_.front().n();
  if (static_cast<int>(basis_.size()) != 2 * n) {
    throw ValidationError("tangent subspace in Hom(P, P^perp) with n = " + std::to_string(n) +
                          " needs " + std::to_string(2 * n) + " basis elements, got " +
                          std::to_string(basis_.size()));
  }
  for (const auto& e : basis_) {
    if (e.n() != n) throw DimensionError("tangent basis elements differ in size");
  }
  Matrix stacked(4 * n, 2 * n);
  stacked << first_parts(), second_parts();
  if (numerical_rank(stacked) < 2 * n) throw ValidationError("tangent basis is linearly dependent");
}

Matrix TangentSubspace::first_parts() const {
  const int m = 2 * n();
  Matrix x(m, m);
  for (int j = 0; j < m; ++j) x.col(j) = basis_[j].first_column();
  return x;
}

Matrix TangentSubspace::second_parts() const {
  const int m = 2 * n();
  Matrix y(m, m);
  for (int j = 0; j < m; ++j) y.col(j) = basis_[j].second_column();
  return y;
}

int numerical_rank(const Matrix& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > kRankTol * s(0)) ++rank;
  }
  return rank;
}

Matrix complement_frame(const OrientedPlane& p) {
  const int m = p.ambient_dim();
  Eigen::HouseholderQR<Matrix> qr(p.basis());
  Matrix q = qr.householderQ() * Matrix::Identity(m, m);
  Matrix frame = q.rightCols(m - 2);
  Matrix full(m, m);
  full << p.basis(), frame;
  if (determinant(full) < 0.0) frame.col(m - 3) *= -1.0;
  return frame;
}

void validate_frame(const OrientedPlane& p, const Matrix& frame) {
  const int m = p.ambient_dim();
  if (frame.rows() != m || frame.cols() != m - 2) {
    throw ValidationError("frame of P^perp must be " + std::to_string(m) + "x" +
                          std::to_string(m - 2));
  }
  const double gram = (frame.transpose() * frame - Matrix::Identity(m - 2, m - 2)).cwiseAbs().maxCoeff();
  const double cross = (p.basis().transpose() * frame).cwiseAbs().maxCoeff();
  if (gram > 1e3 * kOrthoTol || cross > 1e3 * kOrthoTol) {
    throw ValidationError("frame is not an orthonormal basis of P^perp");
  }
  Matrix full(m, m);
  full << p.basis(), frame;
  if (determinant(full) < 0.0) {
    throw ValidationError("frame orientation disagrees with the ambient orientation");
  }
}

OrientedPlane graph_plane(const OrientedPlane& p, const HomElement& l, const Matrix& frame) {
  validate_frame(p, frame);
  if (l.matrix().rows() != frame.cols()) throw DimensionError("Hom element does not match the frame");
  return OrientedPlane::orthonormalized(p.first() + frame * l.first_column(),
                                        p.second() + frame * l.second_column());
}

HomElement plane_to_hom(const OrientedPlane& p, const OrientedPlane& q, const Matrix& frame) {
  validate_frame(p, frame);
  if (q.ambient_dim() != p.ambient_dim()) throw DimensionError("planes live in different spaces");
  // q_a = sum_b G(a,b) u_b + sum_k H(a,k) v_k and q_a = sum_b G(a,b) (u_b + L u_b),
  // so G L^T = H.
  const Matrix g = q.basis().transpose() * p.basis();
  const Matrix h = q.basis().transpose() * frame;
  const double det = g.determinant();
  if (!(det > kRankTol)) {
    throw ChartDomainError(det > -kRankTol ? "plane contains a vector orthogonal to P"
                                           : "projection of the plane to P reverses orientation");
  }
  return HomElement((g.partialPivLu().solve(h)).transpose());
}

bool in_bad_set(const OrientedPlane& p, const OrientedPlane& q) {
  if (q.ambient_dim() != p.ambient_dim()) throw DimensionError("planes live in different spaces");
  Matrix stacked(4, p.ambient_dim());
  stacked.row(0) = p.first().transpose();
  stacked.row(1) = p.second().transpose();
  stacked.row(2) = q.first().transpose();
  stacked.row(3) = q.second().transpose();
  return numerical_rank(stacked) <= 3;
}

TransversalityResult transverse_to_bad_cone(const TangentSubspace& t) {
  const int m = 2 * t.n();
  const Matrix x = t.first_parts();
  const Matrix y = t.second_parts();
  // A dependency among the first parts is a nonzero element of T inside the
  // second column space, and vice versa.
  if (numerical_rank(x) < m || numerical_rank(y) < m) return {};
  // M x_j = y_j for every basis element, i.e. M X = Y.
  Matrix map = x.transpose().partialPivLu().solve(y.transpose()).transpose();
  const bool transverse = !has_real_eigenvalue(map);
  return {transverse, std::move(map)};
}

TangentSubspace tangent_basis_from_twisting(const Matrix& a) {
  require_square(a, "tangent_basis_from_twisting");
  if (a.rows() % 2 != 0) throw DimensionError("twisting matrix must be 2n x 2n");
  const auto m = a.rows();
  std::vector<HomElement> basis;
  basis.reserve(static_cast<std::size_t>(m));
  for (Eigen::Index j = 0; j < m; ++j) {
    Matrix e(m, 2);
    e.col(0) = Vector::Unit(m, j);
    e.col(1) = a.col(j);
    basis.emplace_back(std::move(e));
  }
  return TangentSubspace(std::move(basis));
}

}  // namespace gcfib
