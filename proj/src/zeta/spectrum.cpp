#include "l2tor/zeta/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace l2tor::zeta {

Spectrum::Spectrum(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (const auto& [l, w] : entries_) {
    if (!std::isfinite(l) || l < 0.0) throw std::invalid_argument("eigenvalues must be finite and nonnegative");
    if (!std::isfinite(w) || !(w > 0.0)) throw std::invalid_argument("weights must be finite and positive");
  }
  std::sort(entries_.begin(), entries_.end());
}

Spectrum Spectrum::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("spectrum: expected a JSON list of [eigenvalue, weight]");
  std::vector<Entry> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& e = j[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw std::invalid_argument("spectrum entry " + std::to_string(k) + ": expected [eigenvalue, weight]");
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return Spectrum(std::move(out));
}

double Spectrum::kernel_weight() const {
  double w = 0.0;
  for (const auto& [l, wt] : entries_)
    if (l == 0.0) w += wt;
  return w;
}

double Spectrum::perp_weight() const { return perp_moment(0); }

double Spectrum::gap() const {
  for (const auto& [l, w] : entries_)
    if (l > 0.0) return l;
  return std::numeric_limits<double>::infinity();
}

double Spectrum::largest() const { return entries_.empty() ? 0.0 : entries_.back().first; }

double Spectrum::perp_moment(int k) const {
  double s = 0.0;
  for (const auto& [l, w] : entries_)
    if (l > 0.0) s += w * std::pow(l, k);
  return s;
}

double Spectrum::heat_trace(double t, bool perp) const {
  if (!(t > 0.0)) throw std::invalid_argument("heat trace needs t > 0");
  double s = 0.0;
  for (const auto& [l, w] : entries_)
    if (!perp || l > 0.0) s += w * std::exp(-t * l);
  return s;
}

sdf::SpectralDensityFunction Spectrum::counting_function(bool perp) const {
  std::vector<std::pair<double, double>> pts;
  for (const auto& e : entries_)
    if (!perp || e.first > 0.0) pts.push_back(e);
  return sdf::SpectralDensityFunction::counting(pts);
}

Spectrum Spectrum::disjoint_union(const Spectrum& other) const {
  std::vector<Entry> all = entries_;
  all.insert(all.end(), other.entries_.begin(), other.entries_.end());
  return Spectrum(std::move(all));
}

}  // namespace l2tor::zeta
