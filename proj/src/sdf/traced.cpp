#include "l2tor/sdf/traced.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace l2tor::sdf {

namespace {

Matrix lower_cholesky(const Matrix& gram) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("gram form must be square");
  if (gram.size() == 0) return Matrix(0, 0);
  if (!gram.allFinite()) throw std::invalid_argument("gram form has non-finite entries");
  if (!gram.isApprox(gram.transpose(), 1e-12))
    throw std::invalid_argument("gram form must be symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(gram, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() <= 0.0)
    throw std::invalid_argument("gram form must be positive definite");
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success) throw std::invalid_argument("gram form must be positive definite");
  return llt.matrixL();
}

}  // namespace

TracedSpace::TracedSpace(Eigen::Index dim, double normalization)
    : TracedSpace(Matrix::Identity(dim, dim), normalization) {}

TracedSpace::TracedSpace(Matrix gram, double normalization)
    : gram_(std::move(gram)), normalization_(normalization) {
  if (!(normalization_ > 0.0) || !std::isfinite(normalization_))
    throw std::invalid_argument("trace normalization must be positive");
  chol_ = lower_cholesky(gram_);
}

Matrix TracedSpace::to_orthonormal(const Matrix& coords) const {
  if (dim() == 0) return Matrix(0, coords.cols());
  return chol_.transpose() * coords;
}

Matrix TracedSpace::from_orthonormal(const Matrix& coords) const {
  if (dim() == 0) return Matrix(0, coords.cols());
  return chol_.transpose().triangularView<Eigen::Upper>().solve(coords);
}

Matrix TracedSpace::orthogonal_complement(const Matrix& basis) const {
  if (dim() == 0) return Matrix(0, 0);
  const Matrix whitened = basis.cols() == 0 ? Matrix(dim(), 0) : to_orthonormal(basis);
  return from_orthonormal(linalg::complement_basis(whitened, dim()));
}

Matrix TracedSpace::orthonormalize(const Matrix& vectors) const {
  if (dim() == 0 || vectors.cols() == 0) return Matrix(dim(), 0);
  return from_orthonormal(linalg::image_basis(to_orthonormal(vectors)));
}

Matrix TracedSpace::projector(const Matrix& basis) const {
  if (basis.cols() == 0) return Matrix::Zero(dim(), dim());
  return basis * basis.transpose() * gram_;
}

bool TracedSpace::same_as(const TracedSpace& other) const {
  if (dim() != other.dim()) return false;
  if (std::abs(normalization_ - other.normalization_) > 1e-15 * normalization_) return false;
  if (dim() == 0) return true;
  return (gram_ - other.gram_).norm() <= 1e-12 * gram_.norm();
}

TracedSpace TracedSpace::direct_sum(const TracedSpace& a, const TracedSpace& b) {
  if (a.dim() > 0 && b.dim() > 0 &&
      std::abs(a.normalization() - b.normalization()) > 1e-15 * a.normalization())
    throw std::invalid_argument("direct sum of spaces with different trace normalizations");
  const double normalization = a.dim() > 0 ? a.normalization() : b.normalization();
  Matrix gram = Matrix::Zero(a.dim() + b.dim(), a.dim() + b.dim());
  gram.topLeftCorner(a.dim(), a.dim()) = a.gram();
  gram.bottomRightCorner(b.dim(), b.dim()) = b.gram();
  return TracedSpace(std::move(gram), normalization);
}

TracedMap::TracedMap(TracedSpace source, TracedSpace target, Matrix coefficients)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(coefficients)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw std::invalid_argument("coefficient matrix shape does not match source/target dimensions");
  if (!matrix_.allFinite()) throw std::invalid_argument("map has non-finite coefficients");
}

TracedMap TracedMap::zero(const TracedSpace& source, const TracedSpace& target) {
  return TracedMap(source, target, Matrix::Zero(target.dim(), source.dim()));
}

TracedMap TracedMap::identity(const TracedSpace& space) {
  return TracedMap(space, space, Matrix::Identity(space.dim(), space.dim()));
}

Matrix TracedMap::orthonormal_matrix() const {
  if (matrix_.size() == 0) return Matrix::Zero(target_.dim(), source_.dim());
  // A_hat = L_T^T A L_S^{-T}
  const Matrix right = source_.from_orthonormal(Matrix::Identity(source_.dim(), source_.dim()));
  return target_.to_orthonormal(matrix_ * right);
}

Vector TracedMap::singular_values() const {
  // one value per source dimension: square roots of the eigenvalues of f* f
  Vector sv = Vector::Zero(source_.dim());
  const Vector nonzero = linalg::singular_values(orthonormal_matrix());
  sv.head(nonzero.size()) = nonzero;
  return sv;
}

double TracedMap::norm() const {
  const Vector sv = singular_values();
  return sv.size() == 0 ? 0.0 : sv.maxCoeff();
}

double TracedMap::inverse_norm() const {
  const Vector sv = singular_values();
  const double cut = linalg::zero_threshold(sv);
  double smallest = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cut && (smallest == 0.0 || sv[i] < smallest)) smallest = sv[i];
  return smallest == 0.0 ? 0.0 : 1.0 / smallest;
}

std::size_t TracedMap::rank() const { return linalg::numerical_rank(orthonormal_matrix()); }

double TracedMap::kernel_dimension() const {
  return source_.normalization() * static_cast<double>(source_.dim() - static_cast<Eigen::Index>(rank()));
}

TracedMap TracedMap::adjoint() const {
  // <A u, v>_T = <u, A* v>_S  =>  A* = G_S^{-1} A^T G_T
  Matrix adj(source_.dim(), target_.dim());
  if (adj.size() > 0) adj = source_.gram().llt().solve(matrix_.transpose() * target_.gram());
  return TracedMap(target_, source_, std::move(adj));
}

TracedMap TracedMap::scaled(double factor) const { return TracedMap(source_, target_, factor * matrix_); }

Matrix TracedMap::kernel_basis() const {
  if (source_.dim() == 0) return Matrix(0, 0);
  return source_.from_orthonormal(linalg::kernel_basis(orthonormal_matrix()));
}

Matrix TracedMap::coimage_basis() const { return source_.orthogonal_complement(kernel_basis()); }

Matrix TracedMap::image_basis() const {
  if (target_.dim() == 0) return Matrix(0, 0);
  return target_.from_orthonormal(linalg::image_basis(orthonormal_matrix()));
}

TracedMap TracedMap::restricted_to(const Matrix& basis) const {
  if (basis.rows() != source_.dim()) throw std::invalid_argument("restriction basis has wrong length");
  TracedSpace sub(basis.cols(), source_.normalization());
  return TracedMap(std::move(sub), target_, matrix_ * basis);
}

TracedMap TracedMap::projected_onto(const Matrix& basis) const {
  if (basis.rows() != target_.dim()) throw std::invalid_argument("projection basis has wrong length");
  TracedSpace sub(basis.cols(), target_.normalization());
  Matrix coords = basis.cols() == 0 ? Matrix(0, source_.dim())
                                    : Matrix(basis.transpose() * target_.gram() * matrix_);
  return TracedMap(source_, std::move(sub), std::move(coords));
}

TracedMap compose(const TracedMap& g, const TracedMap& f) {
  if (!g.source().same_as(f.target()))
    throw std::invalid_argument("compose: target of f is not the source of g");
  return TracedMap(f.source(), g.target(), g.matrix() * f.matrix());
}

TracedMap block_diagonal(const TracedMap& phi, const TracedMap& xi) {
  return block_upper(phi, TracedMap::zero(xi.source(), phi.target()), xi);
}

TracedMap block_upper(const TracedMap& phi, const TracedMap& gamma, const TracedMap& xi) {
  if (!gamma.source().same_as(xi.source()) || !gamma.target().same_as(phi.target()))
    throw std::invalid_argument("block_upper: gamma must map source(xi) to target(phi)");
  const TracedSpace source = TracedSpace::direct_sum(phi.source(), xi.source());
  const TracedSpace target = TracedSpace::direct_sum(phi.target(), xi.target());
  Matrix m = Matrix::Zero(target.dim(), source.dim());
  const auto r1 = phi.target().dim();
  const auto c1 = phi.source().dim();
  m.topLeftCorner(r1, c1) = phi.matrix();
  m.topRightCorner(r1, xi.source().dim()) = gamma.matrix();
  m.bottomRightCorner(xi.target().dim(), xi.source().dim()) = xi.matrix();
  return TracedMap(source, target, std::move(m));
}

}  // namespace l2tor::sdf
