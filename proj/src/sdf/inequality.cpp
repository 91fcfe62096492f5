#include "l2tor/sdf/inequality.hpp"

#include <algorithm>
#include <cmath>

namespace l2tor::sdf {

namespace {

double argument(const Term& t, double lambda) {
  if (lambda == 0.0) return 0.0;
  return t.scale * std::pow(lambda, t.exponent);
}

}  // namespace

Side& Side::add(SpectralDensityFunction f, double scale, double exponent, double coefficient) {
  terms.push_back({std::move(f), scale, exponent, coefficient});
  return *this;
}

double Side::operator()(double lambda) const {
  double total = constant;
  for (const auto& t : terms) total += t.coefficient * t.f(argument(t, lambda));
  return total;
}

std::vector<double> Side::jumps() const {
  std::vector<double> out;
  for (const auto& t : terms) {
    if (!(t.scale > 0.0) || !std::isfinite(t.scale)) continue;
    for (const auto& b : t.f.breakpoints()) {
      if (b.lambda == 0.0) {
        out.push_back(0.0);
        continue;
      }
      const double l = std::pow(b.lambda / t.scale, 1.0 / t.exponent);
      if (std::isfinite(l)) out.push_back(l);
    }
  }
  return out;
}

void ProbeResult::merge(const ProbeResult& other) {
  probes += other.probes;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  max_excess = std::max(max_excess, other.max_excess);
}

ProbeResult probe(const Inequality& q) {
  std::vector<double> pts = q.lhs.jumps();
  const std::vector<double> r = q.rhs.jumps();
  pts.insert(pts.end(), r.begin(), r.end());
  pts.erase(std::remove_if(pts.begin(), pts.end(), [&](double l) { return !(l < q.upper); }), pts.end());
  std::sort(pts.begin(), pts.end());

  // cluster right ends
  std::vector<double> ends;
  for (std::size_t i = 0; i < pts.size();) {
    std::size_t k = i;
    while (k + 1 < pts.size() && pts[k + 1] - pts[k] <= kTieTolerance * std::max(pts[k + 1], 1e-300)) ++k;
    ends.push_back(pts[k]);
    i = k + 1;
  }

  std::vector<double> lambdas{0.0};
  double previous = 0.0;
  for (double e : ends) {
    if (e > previous) lambdas.push_back(0.5 * (previous + e));
    // nudged past the cluster so every jump in it is applied despite rounding in scale * l^exponent
    if (e > 0.0) lambdas.push_back(e * (1.0 + 1e-2 * kTieTolerance));
    previous = e;
  }
  if (std::isfinite(q.upper))
    lambdas.push_back(0.5 * (previous + q.upper));
  else
    lambdas.push_back(2.0 * previous + 1.0);

  ProbeResult result;
  for (double l : lambdas) {
    if (!(l < q.upper)) continue;
    const double a = q.lhs(l);
    const double b = q.rhs(l);
    ++result.probes;
    const double excess = q.relation == Relation::Equal ? std::abs(a - b) : a - b;
    result.max_excess = std::max(result.max_excess, excess);
    if (excess > kValueTolerance) result.violations.push_back({q.item, l, a, b});
  }
  return result;
}

}  // namespace l2tor::sdf
