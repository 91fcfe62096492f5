#pragma once

#include "l2tor/sdf/density.hpp"

#include <json.hpp>

#include <utility>
#include <vector>

namespace l2tor::zeta {

/// Finite weighted spectrum; weight = multiplicity x trace normalization.
class Spectrum {
 public:
  using Entry = std::pair<double, double>;  // (eigenvalue, weight)

  Spectrum() = default;
  explicit Spectrum(std::vector<Entry> entries);
  /// JSON list of [eigenvalue, weight] pairs.
  static Spectrum from_json(const nlohmann::json& j);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  double kernel_weight() const;
  double perp_weight() const;  // total weight of positive eigenvalues
  /// Smallest positive eigenvalue, +inf if there is none.
  double gap() const;
  double largest() const;
  /// sum_j w_j lambda_j^k over positive eigenvalues.
  double perp_moment(int k) const;

  /// sum w_j exp(-t lambda_j); zero modes dropped when perp is set.
  double heat_trace(double t, bool perp = true) const;
  /// lambda -> weight of eigenvalues in (0, lambda] (perp) or [0, lambda].
  sdf::SpectralDensityFunction counting_function(bool perp = true) const;

  Spectrum disjoint_union(const Spectrum& other) const;

 private:
  std::vector<Entry> entries_;
};

}  // namespace l2tor::zeta
