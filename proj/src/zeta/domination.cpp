#include "l2tor/zeta/domination.hpp"

#include "l2tor/sdf/random.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace l2tor::zeta {

double laplace_of_step(const sdf::SpectralDensityFunction& F, double eps, double t) {
  const auto& bps = F.breakpoints();
  double total = 0.0;
  for (std::size_t k = 0; k < bps.size(); ++k) {
    const double a = bps[k].lambda;
    if (a >= eps) break;
    const double b = k + 1 < bps.size() ? std::min(bps[k + 1].lambda, eps) : eps;
    // e^{-ta} - e^{-tb} without cancellation
    total += bps[k].value * std::exp(-t * a) * -std::expm1(-t * (b - a)) / t;
  }
  return total;
}

double domination_rhs(const Spectrum& s, double eps, double t) {
  const auto F = s.counting_function(true);
  const double decay = std::exp(-t * eps) / t;
  return laplace_of_step(F, eps, t) + decay * F(eps) + decay * std::exp(eps) * s.heat_trace(1.0, true);
}

DominationReport large_time_dominating_bound(const Spectrum& s, double eps, const std::vector<double>& ts) {
  if (!(eps > 0.0)) throw std::invalid_argument("domination bound needs eps > 0");
  DominationReport r;
  r.min_margin = std::numeric_limits<double>::infinity();
  for (double t : ts) {
    if (!(t >= 1.0)) throw std::invalid_argument("domination bound holds for t >= 1");
    const double lhs = s.heat_trace(t, true) / t;
    const double rhs = domination_rhs(s, eps, t);
    ++r.probes;
    if (rhs > 0.0) r.min_margin = std::min(r.min_margin, (rhs - lhs) / rhs);
    if (lhs > rhs * (1.0 + 1e-12) + 1e-300) r.violations.push_back({t, eps, lhs, rhs});
  }
  return r;
}

DominationReport random_domination_suite(std::uint64_t seed, std::size_t probes) {
  DominationReport total;
  total.min_margin = std::numeric_limits<double>::infinity();
  std::size_t k = 0;
  while (total.probes < probes) {
    sdf::Rng rng(sdf::derive_seed(seed, k++));
    std::vector<Spectrum::Entry> entries;
    const int n = sdf::random_int(rng, 1, 10);
    for (int j = 0; j < n; ++j) {
      const bool zero = sdf::random_int(rng, 0, 9) == 0;
      const double l = zero ? 0.0 : std::exp(sdf::random_uniform(rng, std::log(1e-3), std::log(10.0)));
      entries.emplace_back(l, sdf::random_uniform(rng, 0.05, 2.0));
    }
    const Spectrum s(std::move(entries));
    const double eps = sdf::random_uniform(rng, 0.01, 2.0);
    std::vector<double> ts;
    for (int j = 0; j < 10 && total.probes + ts.size() < probes; ++j)
      ts.push_back(std::exp(sdf::random_uniform(rng, 0.0, std::log(100.0))));
    const DominationReport r = large_time_dominating_bound(s, eps, ts);
    total.probes += r.probes;
    total.violations.insert(total.violations.end(), r.violations.begin(), r.violations.end());
    total.min_margin = std::min(total.min_margin, r.min_margin);
  }
  return total;
}

quad::Estimate nested_double_integral(const std::function<double(double)>& G, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("double integral needs eps > 0");
  const double u_max = std::pow(eps, 0.25);
  // inner: l = u^4 removes the l^{1/4} cusp at 0
  auto inner = [&G, u_max](double t) {
    auto f = [&G, t](double u) {
      const double l = u * u * u * u;
      return std::exp(-t * l) * G(l) * 4.0 * u * u * u;
    };
    return quad::integrate(f, 0.0, u_max, 1e-13, 1e-16);
  };
  // outer: t = v^{-4} maps [1, oo) to (0, 1]
  double inner_error = 0.0;
  auto outer = [&inner, &inner_error](double v) {
    if (v <= 0.0) return 0.0;
    const double t = std::pow(v, -4.0);
    if (!std::isfinite(t)) return 0.0;
    const quad::Estimate e = inner(t);
    inner_error = std::max(inner_error, e.error);
    return e.value * 4.0 * std::pow(v, -5.0);
  };
  quad::Estimate e = quad::integrate(outer, 0.0, 1.0, 1e-12, 1e-14);
  e.error += inner_error;
  return e;
}

DoubleIntegral power_bound_double_integral(double eps) {
  DoubleIntegral d;
  d.value = nested_double_integral([](double l) { return std::sqrt(l) + std::pow(l, 0.25); }, eps);
  // int_1^oo e^{-tl} dt = e^{-l}/l, so the double integral is int_0^eps (l^{-1/2} + l^{-3/4}) e^{-l} dl
  d.closed_form = boost::math::tgamma_lower(0.5, eps) + boost::math::tgamma_lower(0.25, eps);
  d.bound = 2.0 * boost::math::tgamma_lower(0.25, eps);
  d.finite = std::isfinite(d.value.value) && std::isfinite(d.bound);
  return d;
}

}  // namespace l2tor::zeta
