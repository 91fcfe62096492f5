#pragma once

#include "l2tor/sdf/inequality.hpp"
#include "l2tor/sdf/random.hpp"

#include <map>
#include <string>
#include <vector>

namespace l2tor::sdf {

struct CheckReport {
  std::string check;
  ProbeResult result;
  std::vector<std::string> checked;  // item ids that were probed
  std::vector<std::string> skipped;  // item ids whose side condition failed
  std::map<std::string, double> constants;

  bool ok() const { return result.violations.empty(); }
};

/// Composition inequalities for f : U -> V, g : V -> W, i : V -> V' injective,
/// p : U0 -> U surjective; r in (0, 1) for the product items.
CheckReport check_basic_F(const TracedMap& f, const TracedMap& g, const TracedMap& i, const TracedMap& p,
                          double r);

/// Inequalities for M = [[phi, gamma], [0, xi]].
CheckReport check_block_matrix_F(const TracedMap& phi, const TracedMap& gamma, const TracedMap& xi, double r);

struct ShortExactConstants {
  double c_E = 0.0;
  double c_C = 0.0;
  double c_delta = 0.0;
  double c_1 = 0.0;
  /// Range the argument actually supports: min of (4 + 2|d|)^-2 and (4 + 2|j^-1||d|)^-2.
  double c_1_proof = 0.0;
};

ShortExactConstants short_exact_constants(const ShortExactTriple& t, int p);

/// Fbar_p(D, l) <= Fbar_p(E, c_E l^1/2) + Fbar(delta^p, c_delta l^1/4) + Fbar_p(C, c_C l^1/4)
/// on 0 <= l < upper (the stated c_1 unless overridden).
CheckReport check_short_exact(const ShortExactTriple& t, int p, double upper = -1.0);

/// Item "gromov-shubin": F_p(C, l) <= F_p(D, |f_{p+1}|^2 |g_p|^2 l) for l < (2|T_{p+1}|)^-2.
/// Item "gromov-shubin.derived": F_p(C, l) <= F_p(D, 2 |f_{p+1}| |g_p| l) for l < (2|T_{p+1}|)^-1.
/// Throws if g f - id - (T c + c T) exceeds 1e-10 in some degree.
CheckReport check_gromov_shubin(const HomotopyEquivalence& h, int p);

/// Largest norm of g_p f_p - id - (T_{p+1} c^p + c^{p-1} T_p) over all degrees.
double homotopy_residual(const HomotopyEquivalence& h);

}  // namespace l2tor::sdf
