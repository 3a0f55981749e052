#include "gcfib/matrix.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "gcfib/error.hpp"
#include "gcfib/scalar.hpp"

namespace gcfib {

void require_square(const Matrix& a, const char* what) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (!a.allFinite()) throw ValidationError(std::string(what) + ": matrix has non-finite entries");
}

std::vector<std::complex<double>> eigenvalues(const Matrix& a) {
  require_square(a, "eigenvalues");
  Eigen::EigenSolver<Matrix> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw Error("eigenvalues: eigensolver did not converge");
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

bool has_real_eigenvalue(const Matrix& a) {
  for (const auto& lambda : eigenvalues(a)) {
    if (std::abs(lambda.imag()) <= kRealnessTol * (1.0 + std::abs(lambda))) return true;
  }
  return false;
}

bool no_real_eigs_2x2_criterion(const Matrix& a) {
  if (a.rows() != 2 || a.cols() != 2) {
    throw DimensionError("2x2 criterion: expected a 2x2 matrix, got " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()));
  }
  const double d = a(0, 0) - a(1, 1);
  return d * d < -4.0 * a(0, 1) * a(1, 0);
}

double determinant(const Matrix& a) {
  require_square(a, "determinant");
  return Eigen::PartialPivLU<Matrix>(a).determinant();
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  Eigen::Index size = 0;
  for (const auto& b : blocks) {
    require_square(b, "block_diagonal");
    size += b.rows();
  }
  Matrix out = Matrix::Zero(size, size);
  Eigen::Index offset = 0;
  for (const auto& b : blocks) {
    out.block(offset, offset, b.rows(), b.cols()) = b;
    offset += b.rows();
  }
  return out;
}

SkewMatrix::SkewMatrix(int dim) : dim_(dim) {
  if (dim < 2 || dim % 2 != 0) {
    throw DimensionError("skew matrix dimension must be even and positive, got " + std::to_string(dim));
  }
  upper_.assign(static_cast<std::size_t>(dim) * (dim - 1) / 2, 0.0);
}

SkewMatrix SkewMatrix::from_upper(int dim, const std::vector<double>& upper) {
  SkewMatrix b(dim);
  if (upper.size() != b.upper_.size()) {
    throw DimensionError("skew matrix of dimension " + std::to_string(dim) + " needs " +
                         std::to_string(b.upper_.size()) + " upper entries, got " +
                         std::to_string(upper.size()));
  }
  b.upper_ = upper;
  return b;
}

SkewMatrix SkewMatrix::from_dense(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw DimensionError("skew matrix must be square");
  if (m.rows() % 2 != 0) {
    throw DimensionError("skew matrix must have even dimension, got " + std::to_string(m.rows()));
  }
  SkewMatrix b(static_cast<int>(m.rows()));
  for (int i = 0; i < b.dim_; ++i) {
    for (int j = i; j < b.dim_; ++j) {
      const double defect = std::abs(m(i, j) + m(j, i));
      if (!(defect <= (i == j ? 2.0 * tol : tol))) {
        std::ostringstream msg;
        msg << "matrix is not skew-symmetric: entry (" << i + 1 << "," << j + 1
            << ") = " << format_double(m(i, j)) << " and entry (" << j + 1 << "," << i + 1
            << ") = " << format_double(m(j, i)) << " are not negatives of each other";
        throw ValidationError(msg.str());
      }
      if (i != j) b.set(i, j, m(i, j));
    }
  }
  return b;
}

SkewMatrix SkewMatrix::skew_part(const Matrix& a) {
  require_square(a, "skew_part");
  SkewMatrix b(static_cast<int>(a.rows()));
  for (int i = 0; i < b.dim_; ++i) {
    for (int j = i + 1; j < b.dim_; ++j) b.set(i, j, a(i, j) - a(j, i));
  }
  return b;
}

std::size_t SkewMatrix::index(int i, int j) const {
  // Offset of row i in the packed strict upper triangle, then column.
  const auto row = static_cast<std::size_t>(i);
  return row * dim_ - row * (row + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

double SkewMatrix::operator()(int i, int j) const {
  if (i == j) return 0.0;
  return i < j ? upper_[index(i, j)] : -upper_[index(j, i)];
}

void SkewMatrix::set(int i, int j, double value) {
  if (i == j) throw ValidationError("diagonal of a skew matrix is fixed at zero");
  if (i < j) {
    upper_[index(i, j)] = value;
  } else {
    upper_[index(j, i)] = -value;
  }
}

Matrix SkewMatrix::dense() const {
  Matrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
  }
  return m;
}

double SkewMatrix::infinity_norm() const {
  double best = 0.0;
  for (int i = 0; i < dim_; ++i) {
    double row = 0.0;
    for (int j = 0; j < dim_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

}  // namespace gcfib
