#include "l2tor/zeta/torsion.hpp"

#include "l2tor/zeta/cim.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace l2tor::zeta {

namespace {

constexpr double kFallbackCut = 1e-6;
constexpr double kAbsTol = 1e-12;

}  // namespace

quad::Estimate d_small(const HeatTraceModel& h) {
  if (!h.coefficients_known())
    throw std::invalid_argument(h.name + ": expansion coefficients unknown; run asympt_fit explicitly");
  if (h.vanishes) return {0.0, 0.0};

  // integrable only if the subtracted trace vanishes as t -> 0
  const double r4 = h.remainder(1e-4), r6 = h.remainder(1e-6);
  if (!std::isfinite(r4) || !std::isfinite(r6) || std::abs(r6) > 0.5 * std::abs(r4) + 1e-9)
    throw std::invalid_argument(h.name + ": theta minus its expansion does not vanish as t -> 0 (not integrable)");

  quad::Estimate near;
  double t0;
  if (h.remainder_integral && h.remainder_radius > 0.0) {
    t0 = std::min(1.0, h.remainder_radius);
    near = h.remainder_integral(t0);
  } else {
    // r(t) = O(t^{1/2}) below t0, so int_0^t0 r dt/t ~ 2 r(t0)
    t0 = kFallbackCut;
    near.value = 2.0 * h.remainder(t0);
    near.error = std::abs(near.value);
  }
  quad::Estimate far{0.0, 0.0};
  if (t0 < 1.0)
    far = quad::integrate([&h](double s) { return h.remainder(std::exp(s)); }, std::log(t0), 0.0, 1e-13, kAbsTol);

  double constant = 0.0;
  for (int i = 0; i <= h.m; ++i) constant += c_im(i, h.m) * *h.coefficients[static_cast<std::size_t>(i)];
  return {near.value + far.value + constant, near.error + far.error};
}

std::string to_string(DeterminantClass d) {
  switch (d) {
    case DeterminantClass::Yes:
      return "yes";
    case DeterminantClass::No:
      return "no";
    default:
      return "unknown";
  }
}

LargeTimeResult large_time_integral(const HeatTraceModel& h) {
  LargeTimeResult out;
  if (h.vanishes) {
    out.determinant_class = DeterminantClass::Yes;
    out.value = 0.0;
    out.method = "vanishing trace";
    return out;
  }
  auto integrand = [&h](double t) { return h.trace(t) / t; };

  if (h.gap && *h.gap > 0.0 && std::isfinite(*h.gap)) {
    const double lambda1 = *h.gap;
    const double theta1 = h.trace(1.0);
    // tail past T: theta(1) e^{-lambda1 (T-1)} / (lambda1 T) with e^-40 ~ 4e-18
    const double T = 1.0 + 40.0 / lambda1;
    const quad::Estimate e = quad::integrate(integrand, 1.0, T, 1e-13, kAbsTol);
    out.tail_bound = std::abs(theta1) * std::exp(-lambda1 * (T - 1.0)) / (lambda1 * T);
    out.value = e.value;
    out.error = e.error + out.tail_bound;
    out.determinant_class = DeterminantClass::Yes;
    out.method = "spectral gap";
    return out;
  }
  if (h.power_law && h.power_law->alpha > 0.0) {
    const double alpha = h.power_law->alpha;
    // t = v^{-1/alpha}: int_0^1 theta(v^{-1/alpha}) dv / (alpha v), integrand bounded by C / alpha
    auto g = [&h, alpha](double v) {
      if (v <= 0.0) return 0.0;
      const double t = std::pow(v, -1.0 / alpha);
      if (!std::isfinite(t)) return 0.0;
      return h.trace(t) / (alpha * v);
    };
    const quad::Estimate e = quad::integrate(g, 0.0, 1.0, 1e-13, kAbsTol);
    out.value = e.value;
    out.error = e.error;
    out.determinant_class = DeterminantClass::Yes;
    out.method = "power law";
    return out;
  }

  // comparison test: theta(t) >= c / ln t makes int theta dt/t diverge like ln ln t
  bool growing = true;
  double previous = -std::numeric_limits<double>::infinity();
  for (int k = 3; k <= 12; ++k) {
    const double t = std::pow(10.0, k);
    const double v = h.trace(t) * std::log(t);
    if (!(v >= previous * (1.0 - 1e-12))) growing = false;
    previous = v;
  }
  if (growing && previous > 0.0) {
    out.determinant_class = DeterminantClass::No;
    out.method = "divergent: theta(t) ln t does not decay";
  } else {
    out.determinant_class = DeterminantClass::Unknown;
    out.method = "no gap or decay certificate";
  }
  return out;
}

quad::Estimate zeta_derivative_at_zero(const HeatTraceModel& h) {
  const quad::Estimate small = d_small(h);
  const LargeTimeResult large = large_time_integral(h);
  if (large.determinant_class != DeterminantClass::Yes || !large.value)
    throw std::invalid_argument(h.name + ": large-time integral not certified (" + large.method + ")");
  return {small.value + *large.value, small.error + large.error};
}

TorsionResult analytic_torsion(const std::vector<std::pair<int, HeatTraceModel>>& degrees) {
  TorsionResult out;
  for (const auto& [p, h] : degrees) {
    const quad::Estimate small = d_small(h);
    const LargeTimeResult large = large_time_integral(h);
    if (large.determinant_class != DeterminantClass::Yes || !large.value)
      throw std::invalid_argument("degree " + std::to_string(p) + " is not certified determinant class (" +
                                  large.method + ")");
    out.per_degree.push_back({p, small.value, *large.value, small.error + large.error});
    const double weight = (p % 2 ? -1.0 : 1.0) * p;
    out.total += weight * (small.value + *large.value);
    out.error += std::abs(weight) * (small.error + large.error);
  }
  return out;
}

quad::Estimate zeta_det(const HeatTraceModel& h) {
  if (h.vanishes || !h.gap || !(*h.gap > 0.0))
    throw std::invalid_argument(h.name + ": determinant needs a positive spectral gap");
  const quad::Estimate z = zeta_derivative_at_zero(h);
  const double det = std::exp(-z.value);
  return {det, det * z.error};
}

quad::Estimate zeta_det(const Spectrum& s) {
  if (s.perp_weight() == 0.0) throw std::invalid_argument("determinant needs a positive eigenvalue");
  return zeta_det(HeatTraceModel::from_spectrum(s, 0));
}

double cheeger_mueller_correction(long chi_boundary) { return std::log(2.0) / 2.0 * static_cast<double>(chi_boundary); }

}  // namespace l2tor::zeta
