#pragma once

#include "l2tor/zeta/heat_trace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace l2tor::zeta {

/// int_0^1 (theta - sum_i a_i t^{-(m-i)/2}) dt/t + sum_i c(i,m) a_i.
/// Refuses unknown coefficients and remainders that do not vanish as t -> 0.
quad::Estimate d_small(const HeatTraceModel& h);

enum class DeterminantClass { Yes, No, Unknown };
std::string to_string(DeterminantClass d);

struct LargeTimeResult {
  DeterminantClass determinant_class = DeterminantClass::Unknown;
  std::optional<double> value;
  double error = 0.0;
  double tail_bound = 0.0;  // certified bound on the part of the integral not computed by quadrature
  std::string method;
};

/// int_1^oo theta(t) dt/t, certified by a spectral gap or a power-law bound; otherwise a
/// comparison test decides divergence (theta(t) ln t not decaying) or reports Unknown.
LargeTimeResult large_time_integral(const HeatTraceModel& h);

struct DegreeTorsion {
  int p;
  double small_part;
  double large_part;
  double error;
};

struct TorsionResult {
  std::vector<DegreeTorsion> per_degree;
  double total = 0.0;
  double error = 0.0;
};

/// sum_p (-1)^p p (d_small_p + large_p). Throws if some degree is not certified determinant class.
TorsionResult analytic_torsion(const std::vector<std::pair<int, HeatTraceModel>>& degrees);

/// zeta'(0) = d_small + large-time integral.
quad::Estimate zeta_derivative_at_zero(const HeatTraceModel& h);
/// exp(-zeta'(0)) for a heat trace with a positive spectral gap.
quad::Estimate zeta_det(const HeatTraceModel& h);
quad::Estimate zeta_det(const Spectrum& s);

/// (ln 2)/2 * chi(boundary).
double cheeger_mueller_correction(long chi_boundary);

}  // namespace l2tor::zeta
