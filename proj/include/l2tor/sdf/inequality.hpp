#pragma once

#include "l2tor/sdf/density.hpp"

#include <limits>
#include <string>
#include <vector>

namespace l2tor::sdf {

/// coefficient * F(scale * lambda^exponent).
struct Term {
  SpectralDensityFunction f;
  double scale = 1.0;
  double exponent = 1.0;
  double coefficient = 1.0;
};

struct Side {
  std::vector<Term> terms;
  double constant = 0.0;

  Side& add(SpectralDensityFunction f, double scale = 1.0, double exponent = 1.0, double coefficient = 1.0);
  double operator()(double lambda) const;
  /// Values of lambda at which some term jumps.
  std::vector<double> jumps() const;
};

enum class Relation { LessEqual, Equal };

struct Inequality {
  std::string item;
  Side lhs;
  Side rhs;
  Relation relation = Relation::LessEqual;
  /// Checked on 0 <= lambda < upper.
  double upper = std::numeric_limits<double>::infinity();
};

struct Violation {
  std::string item;
  double lambda;
  double lhs;
  double rhs;
};

struct ProbeResult {
  std::size_t probes = 0;
  std::vector<Violation> violations;
  double max_excess = -std::numeric_limits<double>::infinity();  // max lhs - rhs over probes

  void merge(const ProbeResult& other);
};

/// Relative width under which jumps of different terms count as simultaneous.
inline constexpr double kTieTolerance = 1e-9;
/// Absolute slack on values (sums of normalized dimensions).
inline constexpr double kValueTolerance = 1e-9;

/// Decides the relation on [0, upper) exactly for step functions: probes lambda = 0, the right
/// end of every cluster of jumps, the midpoints between clusters and one point past the last.
ProbeResult probe(const Inequality& inequality);

}  // namespace l2tor::sdf
