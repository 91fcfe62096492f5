#include "l2tor/hyperbolic/cusp.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace l2tor::hyperbolic {

double cusp_volume(const CuspEnd& end, int m) { return cusp_volume(end, m, end.base_height); }

double cusp_volume(const CuspEnd& end, int m, double R) {
  if (m < 2) throw std::invalid_argument("cusp volume needs m >= 2, got " + std::to_string(m));
  if (!(end.cross_section_volume > 0.0)) throw std::invalid_argument("cusp cross-section volume must be positive");
  if (std::isinf(R) && R > 0.0) return 0.0;
  return end.cross_section_volume * std::exp(-(m - 1) * R) / (m - 1);
}

double truncated_volume(double total_volume, const std::vector<CuspEnd>& ends, double R, int m) {
  double cusps = 0.0;
  for (const auto& e : ends) cusps += cusp_volume(e, m, R);
  if (cusps > total_volume) throw std::invalid_argument("cusp volumes at this height exceed the total volume");
  return total_volume - cusps;
}

}  // namespace l2tor::hyperbolic
