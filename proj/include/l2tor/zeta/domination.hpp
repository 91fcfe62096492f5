#pragma once

#include "l2tor/quadrature.hpp"
#include "l2tor/zeta/spectrum.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace l2tor::zeta {

struct DominationProbe {
  double t;
  double eps;
  double lhs;  // theta(t) / t
  double rhs;
};

struct DominationReport {
  std::size_t probes = 0;
  std::vector<DominationProbe> violations;
  double min_margin = 0.0;  // min (rhs - lhs) / rhs over probes
};

/// int_0^eps e^{-t l} F(l) dl for a step function F, in closed form.
double laplace_of_step(const sdf::SpectralDensityFunction& F, double eps, double t);

/// Right side of the large-time domination: int_0^eps e^{-tl} F dl + e^{-t eps} F(eps) / t
/// + e^{-t eps} e^{eps} theta(1) / t, with F the perp counting function of the spectrum.
double domination_rhs(const Spectrum& s, double eps, double t);

/// Checks theta(t)/t <= domination_rhs for every t in ts (t >= 1).
DominationReport large_time_dominating_bound(const Spectrum& s, double eps, const std::vector<double>& ts);

/// Random spectra, eps and t >= 1; `probes` evaluations in total.
DominationReport random_domination_suite(std::uint64_t seed, std::size_t probes);

struct DoubleIntegral {
  quad::Estimate value;    // nested quadrature
  double closed_form = 0.0;  // lower incomplete gamma evaluation
  double bound = 0.0;        // comparison bound 2 gamma(1/4, eps), valid for eps <= 1
  bool finite = false;
};

/// int_1^oo int_0^eps e^{-t l} G(l) dl dt by nested quadrature; G(l) = O(l^{1/4}) near 0 keeps the
/// outer integrand O(t^{-5/4}).
quad::Estimate nested_double_integral(const std::function<double(double)>& G, double eps);

/// G(l) = l^{1/2} + l^{1/4}: quadrature, closed form gamma(1/2, eps) + gamma(1/4, eps), comparison bound.
DoubleIntegral power_bound_double_integral(double eps);

}  // namespace l2tor::zeta
