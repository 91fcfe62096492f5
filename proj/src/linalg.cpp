#include "l2tor/linalg.hpp"

#include <algorithm>

namespace l2tor::linalg {

double zero_threshold(const Vector& sv) {
  if (sv.size() == 0) return 0.0;
  return kRankTolerance * sv.maxCoeff();
}

Vector singular_values(const Matrix& a) {
  if (a.size() == 0) return Vector();
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues();
}

std::size_t numerical_rank(const Matrix& a) {
  const Vector sv = singular_values(a);
  const double cut = zero_threshold(sv);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cut) ++r;
  return r;
}

Matrix image_basis(const Matrix& a) {
  if (a.rows() == 0) return Matrix(0, 0);
  if (a.cols() == 0) return Matrix(a.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU);
  const Vector sv = svd.singularValues();
  const double cut = zero_threshold(sv);
  Eigen::Index r = 0;
  while (r < sv.size() && sv[r] > cut) ++r;
  return svd.matrixU().leftCols(r);
}

Matrix kernel_basis(const Matrix& a) {
  const Eigen::Index n = a.cols();
  if (n == 0) return Matrix(0, 0);
  if (a.rows() == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const Vector sv = svd.singularValues();
  const double cut = zero_threshold(sv);
  Eigen::Index r = 0;
  while (r < sv.size() && sv[r] > cut) ++r;
  return svd.matrixV().rightCols(n - r);
}

Matrix complement_basis(const Matrix& basis, Eigen::Index n) {
  if (basis.cols() == 0) return Matrix::Identity(n, n);
  return kernel_basis(basis.transpose());
}

Matrix pseudo_inverse(const Matrix& a) {
  if (a.size() == 0) return Matrix::Zero(a.cols(), a.rows());
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector sv = svd.singularValues();
  const double cut = zero_threshold(sv);
  Vector inv = Vector::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cut) inv[i] = 1.0 / sv[i];
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

bool all_finite(const Matrix& a) { return a.allFinite(); }

}  // namespace l2tor::linalg
