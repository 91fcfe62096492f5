#pragma once

#include <string>
#include <vector>

namespace l2tor::zeta {

inline constexpr double kEulerGamma = 0.57721566490153286;

/// Candidate closed forms for c(i,m), i != m. c(m,m) is always Euler's constant.
enum class CimConvention {
  Derived,  // -2/(m-i)
  Literal,  // -(m-i)/2
};

std::string to_string(CimConvention c);
double cim_candidate(CimConvention convention, int i, int m);

struct CimOracleRow {
  int n;                 // m - i
  double series;         // coefficient extraction from the 1/Gamma power series
  double finite_difference;  // 50-digit central difference of s / (Gamma(1+s) (s - n/2)) at 0
  double derived;
  double literal;
};

struct CimSelfTest {
  std::vector<CimOracleRow> rows;
  double residual_derived = 0.0;  // max |candidate - oracle| over rows and both oracles
  double residual_literal = 0.0;
  double oracle_agreement = 0.0;  // max |series - finite difference|
  double gamma_prime_residual = 0.0;  // |Gamma'(1) + gamma| at 50 digits
  bool unique = false;
  CimConvention selected = CimConvention::Derived;
};

/// Runs once (cached) and decides which candidate the oracles support. Throws if neither
/// candidate matches to 1e-10.
const CimSelfTest& cim_self_test();

/// d/ds [1/Gamma(s) * 1/(s - (m-i)/2)] at s = 0 with the oracle-selected constant; Euler's constant for i = m.
double c_im(int i, int m);

}  // namespace l2tor::zeta
