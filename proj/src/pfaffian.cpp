#include "gcfib/pfaffian.hpp"

#include <cmath>
#include <utility>

namespace gcfib {

double pfaffian_combinatorial(const SkewMatrix& b) {
  return pfaffian_by_matchings<double>(b.dim(), [&b](int i, int j) { return b(i, j); });
}

Matrix SkewNormalForm::block_matrix() const {
  const auto m = static_cast<Eigen::Index>(2 * block_values.size());
  Matrix d = Matrix::Zero(m, m);
  for (std::size_t k = 0; k < block_values.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(2 * k);
    d(i, i + 1) = block_values[k];
    d(i + 1, i) = -block_values[k];
  }
  return d;
}

// B is normal, so its real Schur form T = U^T B U is block diagonal up to
// rounding: 2x2 blocks for the pairs +-i b_k and 1x1 zeros for the kernel.
// Kernel vectors are paired in the order they appear.
SkewNormalForm skew_normal_form(const SkewMatrix& b) {
  const Matrix dense = b.dense();
  const int m = b.dim();
  Eigen::RealSchur<Matrix> schur(dense);
  if (schur.info() != Eigen::Success) throw Error("skew_normal_form: Schur decomposition failed");
  const Matrix& t = schur.matrixT();
  const Matrix& u = schur.matrixU();

  std::vector<std::pair<Vector, Vector>> planes;
  std::vector<double> values;
  std::vector<Vector> kernel;
  for (int k = 0; k < m;) {
    if (k + 1 < m && t(k + 1, k) != 0.0) {
      double value = 0.5 * (t(k, k + 1) - t(k + 1, k));
      Vector first = u.col(k);
      Vector second = u.col(k + 1);
      if (value < 0.0) {
        std::swap(first, second);
        value = -value;
      }
      planes.emplace_back(std::move(first), std::move(second));
      values.push_back(value);
      k += 2;
    } else {
      kernel.emplace_back(u.col(k));
      k += 1;
    }
  }
  // dim is even and every 2x2 block uses two columns, so the kernel count is even.
  for (std::size_t k = 0; k + 1 < kernel.size(); k += 2) {
    planes.emplace_back(kernel[k], kernel[k + 1]);
    values.push_back(0.0);
  }

  SkewNormalForm form;
  form.rotation = Matrix(m, m);
  for (std::size_t k = 0; k < planes.size(); ++k) {
    form.rotation.row(static_cast<Eigen::Index>(2 * k)) = planes[k].first.transpose();
    form.rotation.row(static_cast<Eigen::Index>(2 * k + 1)) = planes[k].second.transpose();
  }
  form.block_values = std::move(values);
  form.rotation_det_sign = determinant(form.rotation) < 0.0 ? -1 : 1;
  return form;
}

double pfaffian_normal_form(const SkewMatrix& b) {
  const SkewNormalForm form = skew_normal_form(b);
  double product = form.rotation_det_sign;
  for (double v : form.block_values) product *= v;
  return product;
}

double pfaffian(const SkewMatrix& b) {
  return b.dim() <= kMaxCombinatorialDim ? pfaffian_combinatorial(b) : pfaffian_normal_form(b);
}

}  // namespace gcfib
