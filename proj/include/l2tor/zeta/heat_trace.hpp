#pragma once

#include "l2tor/quadrature.hpp"
#include "l2tor/zeta/spectrum.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace l2tor::zeta {

/// theta(t) <= constant * t^-alpha for t >= 1.
struct PowerLawCertificate {
  double constant;
  double alpha;
};

/// Heat trace t -> theta(t) (zero modes removed) with its small-t expansion
/// theta(t) ~ sum_{i=0..m} a_i t^{-(m-i)/2} + O(t^{1/2}).
struct HeatTraceModel {
  std::string name;
  int m = 0;
  std::function<double(double)> trace;
  std::vector<std::optional<double>> coefficients;  // a_i, i = 0..m; nullopt = unknown

  /// Exact value of int_0^t0 (theta - sum_i a_i t^{-(m-i)/2}) dt/t for 0 < t0 <= remainder_radius.
  std::function<quad::Estimate(double)> remainder_integral;
  double remainder_radius = 0.0;

  bool vanishes = false;          // theta == 0
  std::optional<double> gap;      // theta(t) <= theta(1) exp(-gap (t - 1)) for t >= 1
  std::optional<PowerLawCertificate> power_law;

  double operator()(double t) const { return trace(t); }
  /// theta(t) minus the known expansion terms; throws if a coefficient is unknown.
  double remainder(double t) const;
  bool coefficients_known() const;

  /// Perp trace of a finite spectrum; a_m is the total positive weight, the rest of the
  /// expansion is the Taylor series of the exponentials.
  static HeatTraceModel from_spectrum(const Spectrum& s, int m = 0);
  /// Circle of circumference L: eigenvalues (2 pi n / L)^2, n in Z; m = 1.
  static HeatTraceModel circle(double circumference, bool include_zero_mode = false);
  /// theta(t) = sum c_k t^{e_k}; exponents must be of the form -(m-i)/2 or positive.
  static HeatTraceModel power_sum(int m, std::vector<std::pair<double, double>> terms);
  /// Opaque trace with unknown expansion and no large-time certificate.
  static HeatTraceModel from_function(std::string name, int m, std::function<double(double)> f);
};

struct AsymptoticFit {
  std::vector<double> coefficients;  // a_0 .. a_m
  double condition_number = 0.0;
  double residual = 0.0;  // RMS of the weighted residuals
  bool ill_conditioned = false;
};

/// Weighted least squares of theta on {t^{-(m-i)/2}}, rows scaled by t^{m/2}. Grid points must lie in (0, 0.1].
AsymptoticFit asympt_fit(const std::function<double(double)>& theta, int m, const std::vector<double>& grid);
AsymptoticFit asympt_fit(const HeatTraceModel& model, const std::vector<double>& grid);
/// n points geometric on [lo, hi].
std::vector<double> log_grid(double lo, double hi, std::size_t n);

}  // namespace l2tor::zeta
