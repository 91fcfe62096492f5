#pragma once

#include <Eigen/Dense>

#include <cstddef>

namespace l2tor::linalg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Relative singular-value cutoff used for every rank and kernel decision.
inline constexpr double kRankTolerance = 1e-10;

/// Absolute cutoff below which a singular value counts as zero, given the spectrum it belongs to.
double zero_threshold(const Vector& singular_values);

Vector singular_values(const Matrix& a);

std::size_t numerical_rank(const Matrix& a);

/// Orthonormal (Euclidean) basis of the column space, as columns.
Matrix image_basis(const Matrix& a);

/// Orthonormal (Euclidean) basis of the null space, as columns.
Matrix kernel_basis(const Matrix& a);

/// Orthonormal basis of the Euclidean orthogonal complement of span(basis) in R^n.
Matrix complement_basis(const Matrix& basis, Eigen::Index n);

/// Moore-Penrose pseudo-inverse with the shared rank cutoff.
Matrix pseudo_inverse(const Matrix& a);

bool all_finite(const Matrix& a);

}  // namespace l2tor::linalg
