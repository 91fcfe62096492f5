#pragma once

#include "l2tor/anomaly/expr.hpp"

#include <string>
#include <vector>

namespace l2tor::anomaly {

/// Metric family on [0, oo) x torus with normal coordinate x: dim 2 g_u = f (dx^2 + dy^2),
/// dim 3 g_u = f^2 (dx^2 + dy^2 + dz^2).
class ConformalFamily {
 public:
  ConformalFamily(int dim, Expression f);
  /// "preset:paper" gives 1+u*x in dim 2 and 1+x+u*x in dim 3; anything else is parsed.
  static ConformalFamily from_text(int dim, const std::string& text);

  int dim() const { return dim_; }
  const Expression& f() const { return f_; }
  /// Jet of the conformal factor h (f in dim 2, f^2 in dim 3); throws unless f > 0.
  Jet conformal_factor(double x, double u) const;

 private:
  int dim_;
  Expression f_;
};

struct StarEntry {
  std::string form;   // e.g. "dx^dy"
  std::string image;  // basis form the star maps it to
  double sign;        // Euclidean orientation sign
  Jet coefficient;    // h^{(m - 2p)/2}
};

/// Action of the Hodge star on the degree-p coordinate basis at (x, u).
std::vector<StarEntry> hodge_star_conformal(const ConformalFamily& F, int p, double x, double u);

/// (d_u *) *^{-1} on degree p forms as a jet in x: closed form (2p - m)/2 h'/h.
Jet v_closed_form(const ConformalFamily& F, int p, double x, double u);
/// Same operator by differentiating the star coefficient of degree m - p.
Jet v_from_star(const ConformalFamily& F, int p, double x, double u);
/// Value of V_p; throws std::logic_error if the two routes differ by more than 1e-10.
double v_operator(const ConformalFamily& F, int p, double x, double u);

/// d/dx (f^2) at x = 0 (dim 3 only).
double mean_curvature(const ConformalFamily& F, double u);

struct AnomalyCoefficients {
  int dim = 0;
  double u = 0.0;
  std::vector<double> d;  // per degree
  double alternating_sum = 0.0;
  std::vector<double> psi, psi_n, psi_d;
  double mean_curvature = 0.0;  // dim 3
  // dim 3: the alternating sums of the second-derivative terms and of the (psi_N + 5 psi_D) k terms
  double second_derivative_sum = 0.0;
  double curvature_term_sum = 0.0;
};

/// Boundary t^0 coefficients for absolute boundary conditions, valid when d_u f(0, u) = 0.
/// `boundary_volume` is the volume of the flat cross-section (1 for the unit S^1 / T^2).
AnomalyCoefficients anomaly_coefficients(const ConformalFamily& F, double u, double boundary_volume = 1.0);

/// Anomaly of N x S^{2k}: chi(S^{2k}) = 2 times the anomaly of N.
double product_lift(double base_sum);

}  // namespace l2tor::anomaly
