#pragma once

#include <string>
#include <vector>

namespace l2tor::heat {

enum class DomainKind { Line, HalfLineNeumann, HalfLineDirichlet, IntervalNeumann, Circle };

struct Domain1D {
  DomainKind kind = DomainKind::Line;
  double length = 0.0;  // interval and circle only

  static Domain1D line() { return {DomainKind::Line, 0.0}; }
  static Domain1D half_line_neumann() { return {DomainKind::HalfLineNeumann, 0.0}; }
  static Domain1D half_line_dirichlet() { return {DomainKind::HalfLineDirichlet, 0.0}; }
  static Domain1D interval_neumann(double L);
  static Domain1D circle(double L);

  bool contains(double x) const;
  /// Lower and upper ends of the coordinate range (circle: [0, L)).
  double lower() const;
  double upper() const;
  std::string name() const;
};

/// (4 pi t)^{-1/2} exp(-d^2 / 4t)
double gaussian(double t, double d);

/// Heat kernel by the method of images; images within 12 sqrt(t) + span of the source are kept.
double kernel_1d(const Domain1D& D, double t, double x, double y);

struct HeatGrid {
  double t_min = 1e-4;
  double t_max = 10.0;
  std::size_t t_points = 41;
  double x_max = 4.0;  // right end of the x-range when the domain is unbounded
  std::size_t x_points = 64;

  std::vector<double> t_grid() const;  // geometric
  std::vector<double> x_grid(const Domain1D& D) const;  // uniform on the domain's range
};

/// Distance from x in V to the part of N not covered by V. Supported pairs: half-line in line
/// (either boundary condition), Neumann interval [0, L] in Neumann half-line, and V = N.
double distance_to_complement(const Domain1D& V, const Domain1D& N, double x);

struct ConstantFit {
  double c2;
  double c1;  // smallest C1 with |K_V - K_N|(t,x,x) <= C1 exp(-d^2 / (C2 t)) on the fitting grid
  std::size_t refined_violations;  // same bound on a 4x refined grid with the same t-range
};

struct InsensitivityReport {
  std::string pair;
  double K = 0.0;
  std::vector<ConstantFit> fits;  // C2 in {1, 2, 4}
  double fitted_c1 = 0.0;
  double fitted_c2 = 0.0;  // smallest C2 whose bound also holds on the refined grid
  /// Half-line in line only: max |diff - (4 pi t)^{-1/2} e^{-x^2/t}|, relative to the Gaussian scale.
  double identity_residual = 0.0;
  std::size_t identity_violations = 0;  // identity_residual above 1e-12 at a grid point
  std::size_t points = 0;
  bool ok() const { return identity_violations == 0 && fitted_c2 > 0.0; }
};

/// Diagonal comparison of K_V and K_N over grid points with distance_to_complement >= K.
InsensitivityReport boundary_insensitivity_check(const Domain1D& V, const Domain1D& N, double K,
                                                 const HeatGrid& grid = {});

/// C1(K) for each K at fixed C2; the check wants a nonincreasing sequence.
std::vector<double> c1_profile(const Domain1D& V, const Domain1D& N, const std::vector<double>& Ks, double c2,
                               const HeatGrid& grid = {});

struct SupBound {
  double sup = 0.0;       // over t >= t0, x, y on the grid
  double diagonal = 0.0;  // max_x K(t0, x, x)
  bool attained_at_t0 = false;
};

/// Supremum of the kernel over t in [t0, 100 t0] and an x, y grid.
SupBound sup_bound_check(const Domain1D& D, double t0, const HeatGrid& grid = {});

}  // namespace l2tor::heat
