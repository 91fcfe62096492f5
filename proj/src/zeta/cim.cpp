#include "l2tor/zeta/cim.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace l2tor::zeta {

namespace {

using Real50 = boost::multiprecision::cpp_bin_float_50;

constexpr int kSeriesOrder = 12;
constexpr double kSelectTolerance = 1e-10;

// coefficients b_0..b_K of 1/Gamma(s) = s exp(gamma s - sum_{k>=2} (-1)^k zeta(k) s^k / k)
std::vector<Real50> reciprocal_gamma_series() {
  std::vector<Real50> g(kSeriesOrder + 1, Real50(0));  // exponent series
  g[1] = Real50(boost::math::constants::euler<Real50>());
  for (int k = 2; k <= kSeriesOrder; ++k) {
    const Real50 z = boost::math::zeta(Real50(k));
    g[static_cast<std::size_t>(k)] = (k % 2 ? Real50(1) : Real50(-1)) * z / k;
  }
  // e = exp(g) via e' = g' e
  std::vector<Real50> e(kSeriesOrder + 1, Real50(0));
  e[0] = 1;
  for (int n = 1; n <= kSeriesOrder; ++n) {
    Real50 acc = 0;
    for (int k = 1; k <= n; ++k) acc += k * g[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(n - k)];
    e[static_cast<std::size_t>(n)] = acc / n;
  }
  std::vector<Real50> b(kSeriesOrder + 1, Real50(0));
  for (int n = 1; n <= kSeriesOrder; ++n) b[static_cast<std::size_t>(n)] = e[static_cast<std::size_t>(n - 1)];
  return b;
}

// s^1 coefficient of (sum b_k s^k) * 1/(s - a), with 1/(s - a) = -(1/a) sum_j (s/a)^j
Real50 series_oracle(const std::vector<Real50>& b, Real50 a) {
  Real50 c1 = 0;
  for (int k = 0; k <= 1; ++k) {
    const int j = 1 - k;
    c1 += b[static_cast<std::size_t>(k)] * (-1 / a) * pow(1 / a, j);
  }
  return c1;
}

Real50 difference_oracle(Real50 a) {
  auto h = [a](Real50 s) { return s / (boost::math::tgamma(1 + s) * (s - a)); };
  const Real50 step("1e-12");
  return (h(step) - h(-step)) / (2 * step);
}

CimSelfTest run_self_test() {
  CimSelfTest out;
  const auto b = reciprocal_gamma_series();
  for (int n = 1; n <= 8; ++n) {
    const Real50 a = Real50(n) / 2;
    CimOracleRow row;
    row.n = n;
    row.series = static_cast<double>(series_oracle(b, a));
    row.finite_difference = static_cast<double>(difference_oracle(a));
    row.derived = cim_candidate(CimConvention::Derived, 0, n);
    row.literal = cim_candidate(CimConvention::Literal, 0, n);
    for (double oracle : {row.series, row.finite_difference}) {
      out.residual_derived = std::max(out.residual_derived, std::abs(row.derived - oracle));
      out.residual_literal = std::max(out.residual_literal, std::abs(row.literal - oracle));
    }
    out.oracle_agreement = std::max(out.oracle_agreement, std::abs(row.series - row.finite_difference));
    out.rows.push_back(row);
  }
  // Gamma'(1) = -gamma
  const Real50 step("1e-15");
  const Real50 dgamma = (boost::math::tgamma(1 + step) - boost::math::tgamma(1 - step)) / (2 * step);
  out.gamma_prime_residual = static_cast<double>(abs(dgamma + Real50(kEulerGamma)));

  const bool derived_ok = out.residual_derived < kSelectTolerance;
  const bool literal_ok = out.residual_literal < kSelectTolerance;
  if (!derived_ok && !literal_ok) throw std::runtime_error("c(i,m) self-test: no candidate matches the oracle");
  out.unique = derived_ok != literal_ok;
  out.selected = derived_ok ? CimConvention::Derived : CimConvention::Literal;
  return out;
}

}  // namespace

std::string to_string(CimConvention c) { return c == CimConvention::Derived ? "-2/(m-i)" : "-(m-i)/2"; }

double cim_candidate(CimConvention convention, int i, int m) {
  if (i == m) return kEulerGamma;
  const double n = m - i;
  return convention == CimConvention::Derived ? -2.0 / n : -n / 2.0;
}

const CimSelfTest& cim_self_test() {
  static const CimSelfTest result = run_self_test();
  return result;
}

double c_im(int i, int m) {
  if (i > m || i < 0) throw std::invalid_argument("c(i,m) needs 0 <= i <= m");
  if (i == m) return kEulerGamma;
  return cim_candidate(cim_self_test().selected, i, m);
}

}  // namespace l2tor::zeta
