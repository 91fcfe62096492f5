#pragma once

#include <functional>

namespace l2tor::quad {

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (15/31-point pair) on a finite or infinite interval.
/// Subdivides until the error estimate is below max(abs_tol, rel_tol * |L1 norm|).
Estimate integrate(const Integrand& f, double a, double b, double rel_tol = 1e-12,
                   double abs_tol = 1e-14);

/// Double-exponential rule for integrands with integrable endpoint singularities on [a, b].
Estimate integrate_singular(const Integrand& f, double a, double b, double rel_tol = 1e-12);

}  // namespace l2tor::quad
