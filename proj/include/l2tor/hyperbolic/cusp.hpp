#pragma once

#include <vector>

namespace l2tor::hyperbolic {

/// Cusp end [R, oo) x F with metric du^2 + e^{-2u} dx^2.
struct CuspEnd {
  double cross_section_volume = 1.0;
  double base_height = 0.0;
};

/// vol(F) * e^{-(m-1)R} / (m-1), with R = end.base_height.
double cusp_volume(const CuspEnd& end, int m);
/// Same end cut at height R instead of its base height.
double cusp_volume(const CuspEnd& end, int m, double R);

/// vol(M_R) = total - sum of the end volumes above height R.
double truncated_volume(double total_volume, const std::vector<CuspEnd>& ends, double R, int m);

}  // namespace l2tor::hyperbolic
