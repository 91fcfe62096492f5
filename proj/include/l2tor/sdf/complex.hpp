#pragma once

#include "l2tor/sdf/density.hpp"

#include <vector>

namespace l2tor::sdf {

/// Bounded cochain complex C^lo -> ... -> C^hi of traced spaces; degrees outside the range
/// are zero spaces with zero differentials.
class FiniteCochainComplex {
 public:
  /// differentials[k] : spaces[k] -> spaces[k+1]; the last space has no outgoing map listed.
  FiniteCochainComplex(std::vector<TracedSpace> spaces, std::vector<TracedMap> differentials,
                       int lowest_degree = 0);

  int lowest_degree() const { return lowest_; }
  int highest_degree() const { return lowest_ + static_cast<int>(spaces_.size()) - 1; }
  double normalization() const { return spaces_.front().normalization(); }

  TracedSpace space(int p) const;
  TracedMap differential(int p) const;
  /// c^p* c^p + c^{p-1} c^{p-1}* on C^p.
  TracedMap laplacian(int p) const;
  /// Gram-orthonormal basis of ker c^p intersected with (im c^{p-1})^perp.
  Matrix harmonic_basis(int p) const;
  /// Normalized dimension of H^p.
  double betti(int p) const;

 private:
  std::vector<TracedSpace> spaces_;
  std::vector<TracedMap> differentials_;
  int lowest_;
};

/// F_p(C): SDF of c^p restricted to the orthogonal complement of im c^{p-1}.
SpectralDensityFunction complex_sdf(const FiniteCochainComplex& c, int p);
/// The same function from the singular values of c^p and the ranks of c^p, c^{p-1}.
SpectralDensityFunction complex_sdf_from_ranks(const FiniteCochainComplex& c, int p);

struct LaplacianDecomposition {
  bool holds = true;
  double max_residual = 0.0;
  std::size_t probes = 0;
  std::vector<double> lambdas;    // probes where the two sides differ
  std::vector<double> residuals;
};

/// Compares F(Delta_p^perp, lambda^2) with Fbar_p(C, lambda) + Fbar_{p-1}(C, lambda).
LaplacianDecomposition laplacian_sdf_decomposition(const FiniteCochainComplex& c, int p,
                                                   double tolerance = 1e-8);

/// 0 -> C -> D -> E -> 0, degreewise maps j_p : C^p -> D^p and q_p : D^p -> E^p.
class ShortExactTriple {
 public:
  ShortExactTriple(FiniteCochainComplex c, FiniteCochainComplex d, FiniteCochainComplex e,
                   std::vector<TracedMap> j, std::vector<TracedMap> q);

  const FiniteCochainComplex& C() const { return c_; }
  const FiniteCochainComplex& D() const { return d_; }
  const FiniteCochainComplex& E() const { return e_; }
  TracedMap j(int p) const;
  TracedMap q(int p) const;

  /// delta^p : H^p(E) -> H^{p+1}(C) between harmonic representatives, in orthonormal frames.
  TracedMap connecting_map(int p) const;

 private:
  FiniteCochainComplex c_, d_, e_;
  std::vector<TracedMap> j_, q_;
};

}  // namespace l2tor::sdf
