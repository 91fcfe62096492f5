#pragma once

#include "l2tor/linalg.hpp"

#include <cstddef>

namespace l2tor::sdf {

using linalg::Matrix;
using linalg::Vector;

/// Finite-dimensional Hilbert space with an inner product given by a Gram matrix on the
/// coordinate basis and a trace normalization (1/|G| for a finite symmetry group).
/// The normalized dimension plays the role of the von Neumann dimension.
class TracedSpace {
 public:
  TracedSpace() = default;
  explicit TracedSpace(Eigen::Index dim, double normalization = 1.0);
  TracedSpace(Matrix gram, double normalization);

  Eigen::Index dim() const { return gram_.rows(); }
  double normalization() const { return normalization_; }
  double normalized_dimension() const { return normalization_ * static_cast<double>(dim()); }
  const Matrix& gram() const { return gram_; }

  /// x -> L^T x is an isometry onto Euclidean space, with gram = L L^T.
  Matrix to_orthonormal(const Matrix& coords) const;
  Matrix from_orthonormal(const Matrix& coords) const;

  double inner(const Vector& a, const Vector& b) const { return a.dot(gram_ * b); }

  /// Gram-orthonormal basis (columns) of the orthogonal complement of span(basis).
  Matrix orthogonal_complement(const Matrix& basis) const;
  /// Gram-orthonormal basis of span(vectors).
  Matrix orthonormalize(const Matrix& vectors) const;
  /// Gram-orthogonal projector onto the span of a gram-orthonormal basis.
  Matrix projector(const Matrix& orthonormal_basis) const;

  bool same_as(const TracedSpace& other) const;

  static TracedSpace direct_sum(const TracedSpace& a, const TracedSpace& b);

 private:
  Matrix gram_ = Matrix(0, 0);
  Matrix chol_ = Matrix(0, 0);
  double normalization_ = 1.0;
};

/// Linear map between traced spaces; the coefficient matrix is target.dim x source.dim.
class TracedMap {
 public:
  TracedMap(TracedSpace source, TracedSpace target, Matrix coefficients);

  static TracedMap zero(const TracedSpace& source, const TracedSpace& target);
  static TracedMap identity(const TracedSpace& space);

  const TracedSpace& source() const { return source_; }
  const TracedSpace& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }

  /// Matrix of the map between orthonormal frames of source and target.
  Matrix orthonormal_matrix() const;
  /// Singular values in descending order, w.r.t. the Gram forms, padded with zeros to source.dim().
  Vector singular_values() const;
  double norm() const;
  /// Norm of the inverse image -> kernel complement: 1 / smallest nonzero singular value (0 for the zero map).
  double inverse_norm() const;
  std::size_t rank() const;
  double kernel_dimension() const;  // normalized
  bool injective() const { return rank() == static_cast<std::size_t>(source_.dim()); }
  bool surjective() const { return rank() == static_cast<std::size_t>(target_.dim()); }

  TracedMap adjoint() const;
  TracedMap scaled(double factor) const;

  /// Gram-orthonormal basis of ker and of (ker)^perp in the source; of im in the target.
  Matrix kernel_basis() const;
  Matrix coimage_basis() const;
  Matrix image_basis() const;

  /// Restriction to the subspace spanned by a gram-orthonormal basis of the source.
  /// The new source carries the identity Gram form and the same normalization.
  TracedMap restricted_to(const Matrix& orthonormal_basis) const;
  /// Corestriction onto the subspace spanned by a gram-orthonormal basis of the target
  /// (orthogonal projection followed by coordinates in that basis).
  TracedMap projected_onto(const Matrix& orthonormal_basis) const;

 private:
  TracedSpace source_;
  TracedSpace target_;
  Matrix matrix_;
};

/// g o f.
TracedMap compose(const TracedMap& g, const TracedMap& f);

TracedMap block_diagonal(const TracedMap& phi, const TracedMap& xi);
/// [[phi, gamma], [0, xi]] : U1 + U2 -> V1 + V2.
TracedMap block_upper(const TracedMap& phi, const TracedMap& gamma, const TracedMap& xi);

}  // namespace l2tor::sdf
