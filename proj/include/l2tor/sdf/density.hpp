#pragma once

#include "l2tor/sdf/traced.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace l2tor::sdf {

struct Breakpoint {
  double lambda;
  double value;  // right-continuous value from lambda onwards
};

/// Right-continuous nondecreasing step function lambda -> normalized dimension.
/// Left of the first breakpoint the function is 0.
class SpectralDensityFunction {
 public:
  SpectralDensityFunction() = default;

  static SpectralDensityFunction from_breakpoints(std::vector<Breakpoint> breakpoints);
  /// Counts singular values <= lambda, each with the given weight. Values below the shared
  /// rank cutoff are snapped to exactly zero.
  static SpectralDensityFunction from_singular_values(const Vector& singular_values, double weight);
  /// Step function of a weighted point set: lambda -> sum of weights at positions <= lambda.
  static SpectralDensityFunction counting(const std::vector<std::pair<double, double>>& weighted_points);

  double operator()(double lambda) const;
  double at_zero() const { return (*this)(0.0); }
  double total() const { return breakpoints_.empty() ? 0.0 : breakpoints_.back().value; }
  /// F - F(0).
  SpectralDensityFunction reduced() const;
  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }

 private:
  std::vector<Breakpoint> breakpoints_;
};

/// F(f, lambda) = tr E_{lambda^2}(f* f).
SpectralDensityFunction sdf_of_map(const TracedMap& f);
/// Fbar(f, lambda) = F(f, lambda) - F(f, 0).
SpectralDensityFunction reduced_sdf(const TracedMap& f);

/// Variational count for a map that is diagonal in orthonormal frames: the largest normalized
/// dimension of a coordinate subspace L in ker(f)^perp with |f x| <= lambda |x| on L.
double variational_sdf(const TracedMap& f, double lambda);

struct ExponentFit {
  enum class Status { Fitted, SpectralGap, InsufficientData };
  Status status = Status::InsufficientData;
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double residual = std::numeric_limits<double>::quiet_NaN();  // RMS in log space
  double constant = std::numeric_limits<double>::quiet_NaN();  // smallest C with Fbar <= C lambda^alpha on the breakpoints
  std::size_t points = 0;
  bool certifies_power_law = false;
  std::string note;
};

/// Least-squares slope of log Fbar against log lambda over the breakpoints in (0, eps].
ExponentFit ns_exponent_fit(const SpectralDensityFunction& f, double eps);

}  // namespace l2tor::sdf
