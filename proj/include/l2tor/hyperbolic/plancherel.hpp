#pragma once

#include "l2tor/zeta/heat_trace.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace l2tor::hyperbolic {

/// One spectral piece of the p-form Laplacian: density mu(r) = sum_k mu[k] r^k, eigenvalue r^2 + sigma.
struct PlancherelComponent {
  std::string name;
  double sigma = 0.0;
  std::vector<double> mu;
  std::string provenance;

  double density(double r) const;
};

struct PlancherelRow {
  int p = 0;
  std::vector<PlancherelComponent> components;
};

struct TableValidation {
  double duality_residual = 0.0;   // max relative |K_p - K_{m-p}|
  double leading_residual = 0.0;   // max relative deviation from binom(m,p) (4 pi t)^{-m/2} at t = 1e-4
  double euler_residual = 0.0;     // max |sum (-1)^p K_p| / sum K_p
  bool ok = false;
};

class PlancherelTable {
 public:
  /// Validates shape and runs the three structural checks; throws on failure.
  static PlancherelTable from_json(const nlohmann::json& j);
  static PlancherelTable load(const std::string& path);
  /// data/plancherel_h3.json from the source tree.
  static PlancherelTable shipped_h3();

  int m() const { return m_; }
  const PlancherelRow& row(int p) const;
  const TableValidation& validation() const { return validation_; }

 private:
  int m_ = 0;
  std::vector<PlancherelRow> rows_;
  TableValidation validation_;
};

/// K_p(t) = sum over components of int_0^oo e^{-t(r^2 + sigma)} mu(r) dr; `panels` splits the r-range.
double heat_density(const PlancherelTable& table, int p, double t, int panels = 4);
/// Same integral from the Gaussian moments int r^k e^{-t r^2} dr = Gamma((k+1)/2) / (2 t^{(k+1)/2}).
double heat_density_closed_form(const PlancherelTable& table, int p, double t);

/// Heat trace model of degree p: quadrature trace, expansion coefficients from the Gaussian moments.
zeta::HeatTraceModel heat_model(const PlancherelTable& table, int p, int panels = 4);

/// Torsion per unit volume, sum_p (-1)^p p zeta_p'(0), with the densities as heat traces.
double torsion_constant(const PlancherelTable& table, int panels = 4);
/// Even m gives 0 without computation; m = 3 uses the shipped table; other odd m are rejected.
double torsion_constant(int m);

}  // namespace l2tor::hyperbolic
