#pragma once

#include "l2tor/sdf/complex.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace l2tor::sdf {

using Rng = std::mt19937_64;

/// Seed for instance k of a run, decorrelated from the master seed (splitmix64 step).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k);

Matrix random_normal(Rng& rng, Eigen::Index rows, Eigen::Index cols);
/// Haar-ish orthogonal matrix from the QR factor of a Gaussian matrix.
Matrix random_orthogonal(Rng& rng, Eigen::Index n);
int random_int(Rng& rng, int lo, int hi);  // inclusive
double random_uniform(Rng& rng, double lo, double hi);

/// Gram form A^T A + I with Gaussian A.
TracedSpace random_space(Rng& rng, Eigen::Index dim, double normalization = 1.0);
/// Map of the requested rank with random singular directions; its nonzero singular values
/// (w.r.t. the Gram forms) are log-uniform in [1/10, 10].
TracedMap random_map(Rng& rng, const TracedSpace& source, const TracedSpace& target, Eigen::Index rank);
/// Rank drawn so that full rank is common.
Eigen::Index random_rank(Rng& rng, Eigen::Index max_rank);

/// Complex with spaces of the given dimensions and differentials of the given ranks
/// (ranks[p] <= dims[p] - ranks[p-1], ranks[p] <= dims[p+1]). In orthonormal frames the nonzero
/// singular values are log-uniform in [1/10, 10], so Laplacian eigenvalues stay well resolved.
FiniteCochainComplex random_complex_with_ranks(Rng& rng, const std::vector<Eigen::Index>& dims,
                                               const std::vector<Eigen::Index>& ranks,
                                               double normalization = 1.0);
FiniteCochainComplex random_complex(Rng& rng, int length, Eigen::Index max_dim, double normalization = 1.0);

/// D^p = C^p + E^p in coordinates, d_D = [[c, h], [0, e]] with a coupling h that carries a
/// nontrivial connecting map, and a Gram form on D that mixes the two summands.
ShortExactTriple random_short_exact(Rng& rng, int length, Eigen::Index max_total_dim,
                                    double normalization = 1.0);

struct HomotopyEquivalence {
  FiniteCochainComplex C;
  FiniteCochainComplex D;
  std::vector<TracedMap> f;  // f_p : C^p -> D^p
  std::vector<TracedMap> g;  // g_p : D^p -> C^p
  std::vector<TracedMap> T;  // T_p : C^p -> C^{p-1}

  /// Entries of f, g, T by degree; zero maps outside the stored range.
  TracedMap f_at(int p) const;
  TracedMap g_at(int p) const;
  TracedMap T_at(int p) const;
};

/// D = S(C + A) with A acyclic and S invertible; f, g perturbed by null-homotopic terms.
HomotopyEquivalence random_homotopy_equivalence(Rng& rng, int length, Eigen::Index max_dim,
                                                double normalization = 1.0);

}  // namespace l2tor::sdf
