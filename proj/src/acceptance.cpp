#include "l2tor/acceptance.hpp"

#include "l2tor/anomaly/conformal.hpp"
#include "l2tor/heat/kernel1d.hpp"
#include "l2tor/hyperbolic/plancherel.hpp"
#include "l2tor/jsj/manifest.hpp"
#include "l2tor/sdf/suite.hpp"
#include "l2tor/zeta/cim.hpp"
#include "l2tor/zeta/domination.hpp"
#include "l2tor/zeta/torsion.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace l2tor::acceptance {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v, int precision = 3) {
  std::ostringstream ss;
  ss.precision(precision);
  ss << v;
  return ss.str();
}

CriterionResult c3(std::uint64_t) {
  const auto start = std::chrono::steady_clock::now();
  const double c = hyperbolic::torsion_constant(3);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double err = std::abs(c + 1.0 / (3.0 * kPi));
  return {"C3", "torsion constant of H^3 is -1/(3 pi)", err <= 1e-6 && seconds < 30.0,
          "C3 = " + fmt(c, 12) + ", |error| = " + fmt(err) + ", " + fmt(seconds) + " s", 0.0, {}};
}

CriterionResult even_m(std::uint64_t) {
  bool pass = true;
  std::string detail;
  for (int m : {2, 4, 6, 8}) {
    const double c = hyperbolic::torsion_constant(m);
    pass = pass && c == 0.0;
    detail += "C" + std::to_string(m) + " = " + fmt(c) + " ";
  }
  return {"even-m", "torsion constant vanishes in even dimension", pass, detail, 0.0, {}};
}

CriterionResult anomaly_dim2(std::uint64_t) {
  const auto a = anomaly::anomaly_coefficients(anomaly::ConformalFamily::from_text(2, "preset:paper"), 0.0);
  const double d_expected = -1.0 / (8.0 * kPi);
  const double err = std::max({std::abs(a.alternating_sum + 1.0 / (4.0 * kPi)), std::abs(a.d[0] - d_expected),
                               std::abs(a.d[1]), std::abs(a.d[2] - d_expected)});
  return {"anomaly-dim2", "f = 1+ux: d0 - d1 + d2 = -1/(4 pi)", err <= 1e-12,
          "sum = " + fmt(a.alternating_sum, 15) + ", max |error| = " + fmt(err), 0.0, {}};
}

CriterionResult anomaly_dim3(std::uint64_t) {
  const auto F = anomaly::ConformalFamily::from_text(3, "preset:paper");
  double err = 0.0, cancel = 0.0;
  for (double u : {0.0, 0.1, 0.5, 1.0}) {
    const auto a = anomaly::anomaly_coefficients(F, u);
    err = std::max(err, std::abs(a.alternating_sum + (1.0 + u) / (4.0 * kPi)));
    cancel = std::max({cancel, std::abs(a.second_derivative_sum), std::abs(a.curvature_term_sum)});
  }
  return {"anomaly-dim3", "f = 1+x+ux: alternating sum = -(1+u)/(4 pi)", err <= 1e-12 && cancel <= 1e-12,
          "max |error| = " + fmt(err) + ", max cancellation residual = " + fmt(cancel), 0.0, {}};
}

CriterionResult suite_row(const std::string& id, const std::string& suite, std::uint64_t seed, std::size_t& probes) {
  const auto start = std::chrono::steady_clock::now();
  sdf::SuiteConfig cfg;
  cfg.suite = suite;
  cfg.seed = seed;
  const sdf::SuiteReport r = sdf::run_suite(cfg);
  probes += r.probes;
  std::map<std::string, std::size_t> by_item;
  for (const auto& v : r.violations) ++by_item[v.violation.item];
  std::string detail = std::to_string(r.probes) + " probes, " + std::to_string(r.violations.size()) + " violations";
  for (const auto& [item, n] : by_item) detail += " [" + item + ": " + std::to_string(n) + "]";
  if (!r.errors.empty()) detail += ", " + std::to_string(r.errors.size()) + " errors";
  return {id, suite + " suite", r.ok(), detail,
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), {}};
}

CriterionResult sdf_properties(std::uint64_t seed) {
  CriterionResult c{"sdf-properties", "randomized inequality suites: zero violations", true, "", 0.0, {}};
  std::size_t probes = 0;
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"sdf-basic", "basic"}, {"sdf-block", "block"}, {"short-exact", "short-exact"}, {"gromov-shubin", "gromov-shubin"}};
  double seconds = 0.0;
  for (const auto& [id, suite] : rows) {
    c.parts.push_back(suite_row(id, suite, seed, probes));
    c.pass = c.pass && c.parts.back().pass;
    seconds += c.parts.back().seconds;
  }
  c.pass = c.pass && probes >= 100000 && seconds < 300.0;
  c.detail = std::to_string(probes) + " probes, " + fmt(seconds) + " s";
  for (const auto& p : c.parts)
    if (!p.pass) c.detail += "; " + p.id + ": " + p.detail;
  return c;
}

CriterionResult laplacian(std::uint64_t seed) {
  sdf::SuiteConfig cfg;
  cfg.suite = "laplacian";
  cfg.seed = seed;
  const sdf::SuiteReport r = sdf::run_suite(cfg);
  return {"laplacian", "Laplacian SDF = F_p + F_{p-1} on 1000 complexes", r.ok() && cfg.instances >= 1000,
          std::to_string(cfg.instances) + " complexes, " + std::to_string(r.probes) + " probes, " +
              std::to_string(r.violations.size()) + " violations, max excess " + fmt(r.max_excess),
          0.0, {}};
}

CriterionResult circle_det(std::uint64_t) {
  double err = 0.0;
  for (double L : {1.0, 2.0 * kPi, 5.0}) err = std::max(err, std::abs(zeta::zeta_det(zeta::HeatTraceModel::circle(L)).value - L * L));
  return {"circle-det", "zeta determinant of the circle of length L is L^2", err <= 1e-8, "max |error| = " + fmt(err), 0.0, {}};
}

CriterionResult cim_oracle(std::uint64_t) {
  const auto& t = zeta::cim_self_test();
  const bool pass = t.unique && t.selected == zeta::CimConvention::Derived && t.residual_derived < 1e-10;
  return {"cim-oracle", "c(i,m) selected by the 1/Gamma oracles", pass,
          "selected " + zeta::to_string(t.selected) + " (residual " + fmt(t.residual_derived) + "); -(m-i)/2 off by " +
              fmt(t.residual_literal),
          0.0, {}};
}

CriterionResult heat_kernel(std::uint64_t) {
  const auto V = heat::Domain1D::half_line_neumann(), N = heat::Domain1D::line();
  const auto r = heat::boundary_insensitivity_check(V, N, 0.0);
  const std::vector<double> Ks = {0.25, 0.5, 1.0, 2.0};
  const std::vector<double> c1 = heat::c1_profile(V, N, Ks, 1.0);
  bool monotone = true;
  for (std::size_t i = 1; i < c1.size(); ++i) monotone = monotone && c1[i] <= c1[i - 1] * (1.0 + 1e-12);
  std::size_t c2_one_violations = 0;
  for (double K : Ks) c2_one_violations += heat::boundary_insensitivity_check(V, N, K).fits.front().refined_violations;
  const bool pass = r.identity_violations == 0 && r.fitted_c2 == 1.0 && c2_one_violations == 0 && monotone;
  return {"heat-kernel", "half-line in line: boundary insensitivity with C2 = 1", pass,
          "identity residual " + fmt(r.identity_residual) + ", C2 = " + fmt(r.fitted_c2) + ", C1(K) " +
              (monotone ? "nonincreasing" : "not monotone") + ", refined-grid violations " + std::to_string(c2_one_violations),
          0.0, {}};
}

CriterionResult large_t(std::uint64_t seed) {
  const auto d = zeta::random_domination_suite(seed, 10000);
  double err = 0.0;
  for (double eps : {0.1, 0.5, 1.0}) {
    const auto di = zeta::power_bound_double_integral(eps);
    err = std::max(err, std::abs(di.value.value - di.closed_form));
  }
  return {"large-t", "large-time domination and the power-law double integral", d.violations.empty() && d.probes >= 10000 && err <= 1e-8,
          std::to_string(d.probes) + " probes, " + std::to_string(d.violations.size()) + " violations; double integral |error| " + fmt(err),
          0.0, {}};
}

CriterionResult jsj_formula(std::uint64_t) {
  jsj::JsjManifest graph{"graph", 1, {{jsj::PieceKind::Seifert, 0.0, "a"}, {jsj::PieceKind::Seifert, 0.0, "b"}}};
  jsj::JsjManifest single{"single", 1, {{jsj::PieceKind::Hyperbolic, 3.0 * kPi, "h"}}};
  const auto& census = jsj::shipped_census();
  double additivity = 0.0;
  for (const auto& a : census)
    for (const auto& b : census)
      additivity = std::max(additivity, std::abs(jsj::torsion_3manifold(jsj::disjoint_union(a, b)) -
                                                 jsj::torsion_3manifold(a) - jsj::torsion_3manifold(b)));
  const bool pass = jsj::torsion_3manifold(graph) == 0.0 && jsj::torsion_3manifold(single) == -1.0 && additivity <= 1e-12;
  return {"jsj", "torsion = -vol/(3 pi) over hyperbolic JSJ pieces", pass,
          "graph " + fmt(jsj::torsion_3manifold(graph)) + ", volume 3 pi " + fmt(jsj::torsion_3manifold(single), 17) +
              ", additivity residual " + fmt(additivity),
          0.0, {}};
}

const std::vector<std::pair<std::string, std::function<CriterionResult(std::uint64_t)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<CriterionResult(std::uint64_t)>>> r = {
      {"C3", c3},
      {"even-m", even_m},
      {"anomaly-dim2", anomaly_dim2},
      {"anomaly-dim3", anomaly_dim3},
      {"sdf-properties", sdf_properties},
      {"laplacian", laplacian},
      {"circle-det", circle_det},
      {"cim-oracle", cim_oracle},
      {"heat-kernel", heat_kernel},
      {"large-t", large_t},
      {"jsj", jsj_formula},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& criterion_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, f] : registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

CriterionResult run_criterion(const std::string& id, std::uint64_t seed) {
  for (const auto& [name, f] : registry())
    if (name == id) {
      const auto start = std::chrono::steady_clock::now();
      CriterionResult r;
      try {
        r = f(seed);
      } catch (const std::exception& e) {
        r = {id, "", false, std::string("error: ") + e.what(), 0.0, {}};
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    }
  throw std::invalid_argument("unknown acceptance criterion \"" + id + "\"");
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (const auto& id : criterion_ids()) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_table(const std::vector<CriterionResult>& results, bool with_parts) {
  std::ostringstream ss;
  auto line = [&ss](const CriterionResult& r, const std::string& indent) {
    ss << indent << (r.pass ? "PASS" : "FAIL") << "  " << r.id;
    for (std::size_t i = r.id.size() + indent.size(); i < 18; ++i) ss << ' ';
    ss << r.title << ": " << r.detail << '\n';
  };
  for (const auto& r : results) {
    line(r, "");
    if (with_parts)
      for (const auto& p : r.parts) line(p, "  ");
  }
  return ss.str();
}

}  // namespace l2tor::acceptance
