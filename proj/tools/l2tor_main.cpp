#include "l2tor/acceptance.hpp"
#include "l2tor/anomaly/conformal.hpp"
#include "l2tor/config.hpp"
#include "l2tor/heat/kernel1d.hpp"
#include "l2tor/hyperbolic/cusp.hpp"
#include "l2tor/hyperbolic/plancherel.hpp"
#include "l2tor/jsj/manifest.hpp"
#include "l2tor/sdf/suite.hpp"
#include "l2tor/zeta/cim.hpp"
#include "l2tor/zeta/domination.hpp"
#include "l2tor/zeta/torsion.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using nlohmann::json;
using namespace l2tor;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// input problems (bad files, bad values) exit with the usage code
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  json report;
  std::optional<std::string> csv;
  bool pass = true;
};

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const Output& out, const RunConfig& cfg) {
  std::ostringstream ss;
  switch (cfg.format) {
    case OutputFormat::Json:
      ss << out.report.dump(2) << '\n';
      break;
    case OutputFormat::Text:
      flatten(out.report, "", ss);
      break;
    case OutputFormat::Csv:
      if (!out.csv) throw UsageError("csv output is not available for this command");
      ss << *out.csv;
      break;
  }
  if (cfg.output.empty()) {
    std::cout << ss.str();
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw UsageError("cannot write " + cfg.output);
  f << ss.str();
}

std::vector<double> parse_sweep(const std::string& s) {
  double a = 0, b = 0;
  long n = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> a >> c1 >> b >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1 || !in.eof())
    throw UsageError("sweep must look like u0:u1:n, got \"" + s + "\"");
  std::vector<double> v;
  for (long i = 0; i < n; ++i) v.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / (n - 1));
  return v;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// sdf-check
Output run_sdf(const std::string& suite, std::size_t instances, int max_dim, const RunConfig& cfg) {
  std::vector<std::string> suites;
  if (suite == "all")
    suites = sdf::suite_names();
  else
    suites = {suite};
  Output out;
  out.report = {{"seed", cfg.seed}, {"suites", json::array()}};
  std::string csv = "suite,instance,degree,item,lambda,lhs,rhs\n";
  for (const auto& name : suites) {
    sdf::SuiteConfig sc{name, cfg.seed, instances, max_dim};
    const sdf::SuiteReport r = sdf::run_suite(sc);
    out.report["suites"].push_back(sdf::to_json(r));
    out.pass = out.pass && r.ok();
    for (const auto& v : r.violations) {
      std::ostringstream row;
      row.precision(17);
      row << name << ',' << v.instance << ',' << v.degree << ',' << v.violation.item << ',' << v.violation.lambda << ','
          << v.violation.lhs << ',' << v.violation.rhs << '\n';
      csv += row.str();
    }
  }
  out.report["pass"] = out.pass;
  out.csv = csv;
  return out;
}

// zeta
Output run_zeta_cim() {
  const auto& t = zeta::cim_self_test();
  Output out;
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"m-i", r.n}, {"series", r.series}, {"finiteDifference", r.finite_difference},
                    {"-2/(m-i)", r.derived}, {"-(m-i)/2", r.literal}});
  out.report = {{"selected", zeta::to_string(t.selected)},
                {"unique", t.unique},
                {"residualSelected", t.residual_derived},
                {"residualOther", t.residual_literal},
                {"oracleAgreement", t.oracle_agreement},
                {"gammaPrimeResidual", t.gamma_prime_residual},
                {"rows", rows}};
  out.pass = t.unique;
  return out;
}

json degree_json(const zeta::HeatTraceModel& h) {
  const auto small = zeta::d_small(h);
  const auto large = zeta::large_time_integral(h);
  json j = {{"dSmall", small.value},
            {"dSmallError", small.error},
            {"determinantClass", zeta::to_string(large.determinant_class)},
            {"largeTimeMethod", large.method}};
  if (large.value) {
    j["largeTime"] = *large.value;
    j["zetaPrime0"] = small.value + *large.value;
    j["det"] = std::exp(-(small.value + *large.value));
  }
  return j;
}

Output run_zeta_det(std::optional<double> circle, std::optional<std::string> spectrum_file, const RunConfig& cfg) {
  Output out;
  if (circle) {
    const auto h = zeta::HeatTraceModel::circle(*circle);
    out.report = degree_json(h);
    out.report["circumference"] = *circle;
    const double expected = *circle * *circle;
    out.report["expected"] = expected;
    out.pass = std::abs(out.report["det"].get<double>() - expected) <= cfg.tolerance("zeta.det") * std::max(1.0, expected);
    out.report["pass"] = out.pass;
    return out;
  }
  if (!spectrum_file) throw UsageError("zeta det needs --circle or --spectrum");
  zeta::Spectrum s;
  try {
    s = zeta::Spectrum::from_json(load_json_file(*spectrum_file));
  } catch (const std::invalid_argument& e) {
    throw UsageError(*spectrum_file + ": " + e.what());
  }
  out.report = degree_json(zeta::HeatTraceModel::from_spectrum(s));
  return out;
}

Output run_zeta_torsion(const std::string& file) {
  const json j = load_json_file(file);
  std::vector<std::pair<int, zeta::HeatTraceModel>> degrees;
  try {
    for (const auto& d : j.at("degrees"))
      degrees.emplace_back(d.at("p").get<int>(), zeta::HeatTraceModel::from_spectrum(zeta::Spectrum::from_json(d.at("spectrum"))));
  } catch (const json::exception& e) {
    throw UsageError(file + ": expected {\"degrees\": [{\"p\": int, \"spectrum\": [[ev, w], ...]}]}: " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(file + ": " + e.what());
  }
  const auto t = zeta::analytic_torsion(degrees);
  Output out;
  json per = json::array();
  for (const auto& d : t.per_degree) per.push_back({{"p", d.p}, {"dSmall", d.small_part}, {"largeTime", d.large_part}});
  out.report = {{"torsion", t.total}, {"error", t.error}, {"degrees", per}};
  return out;
}

Output run_zeta_domination(std::size_t probes, double eps, const RunConfig& cfg) {
  const auto d = zeta::random_domination_suite(cfg.seed, probes);
  const auto di = zeta::power_bound_double_integral(eps);
  Output out;
  json v = json::array();
  for (const auto& p : d.violations) v.push_back({{"t", p.t}, {"eps", p.eps}, {"lhs", p.lhs}, {"rhs", p.rhs}});
  out.report = {{"seed", cfg.seed},
                {"probes", d.probes},
                {"violations", v},
                {"minMargin", d.min_margin},
                {"doubleIntegral",
                 {{"eps", eps}, {"quadrature", di.value.value}, {"closedForm", di.closed_form}, {"bound", di.bound}}}};
  out.pass = d.violations.empty();
  return out;
}

// hyperbolic
Output run_hyperbolic(int m, const std::string& op, std::optional<std::string> table_path, int p, std::vector<double> ts,
                      double cross_section, double R, const RunConfig& cfg) {
  Output out;
  if (op == "constant") {
    double c = 0.0;
    if (m % 2 == 0 || !table_path)
      c = hyperbolic::torsion_constant(m);
    else
      c = hyperbolic::torsion_constant(hyperbolic::PlancherelTable::load(*table_path));
    out.report = {{"m", m}, {"constant", c}};
    if (m == 3) {
      const double expected = -1.0 / (3.0 * 3.14159265358979323846);
      out.report["expected"] = expected;
      out.pass = std::abs(c - expected) <= cfg.tolerance("hyperbolic.constant");
      out.report["pass"] = out.pass;
    }
    return out;
  }
  if (op == "density") {
    if (m != 3 && !table_path) throw UsageError("only the m = 3 table ships; pass --table for other m");
    const auto table = table_path ? hyperbolic::PlancherelTable::load(*table_path) : hyperbolic::PlancherelTable::shipped_h3();
    if (ts.empty()) ts = zeta::log_grid(1e-4, 10.0, 21);
    json rows = json::array();
    std::ostringstream csv;
    csv.precision(17);
    csv << "p,t,density\n";
    for (double t : ts) {
      const double k = hyperbolic::heat_density(table, p, t);
      rows.push_back({{"t", t}, {"density", k}});
      csv << p << ',' << t << ',' << k << '\n';
    }
    const auto& v = table.validation();
    out.report = {{"m", table.m()},
                  {"p", p},
                  {"rows", rows},
                  {"validation", {{"duality", v.duality_residual}, {"leadingTerm", v.leading_residual}, {"euler", v.euler_residual}}}};
    out.csv = csv.str();
    return out;
  }
  if (op == "cusp") {
    const hyperbolic::CuspEnd end{cross_section, R};
    out.report = {{"m", m}, {"crossSectionVolume", cross_section}, {"R", R}, {"volume", hyperbolic::cusp_volume(end, m)}};
    return out;
  }
  throw UsageError("unknown --op \"" + op + "\" (density, constant, cusp)");
}

// heatcmp
Output run_heatcmp(const std::string& pair, double K, double L, const RunConfig& cfg) {
  heat::Domain1D V, N;
  if (pair == "halfline-line") {
    V = heat::Domain1D::half_line_neumann();
    N = heat::Domain1D::line();
  } else if (pair == "interval-halfline") {
    V = heat::Domain1D::interval_neumann(L);
    N = heat::Domain1D::half_line_neumann();
  } else {
    throw UsageError("unknown --pair \"" + pair + "\" (halfline-line, interval-halfline)");
  }
  const heat::HeatGrid grid;
  const auto r = heat::boundary_insensitivity_check(V, N, K, grid);
  Output out;
  json fits = json::array();
  for (const auto& f : r.fits) fits.push_back({{"C2", f.c2}, {"C1", f.c1}, {"refinedViolations", f.refined_violations}});
  out.pass = r.fitted_c2 > 0.0 && r.identity_residual <= cfg.tolerance("heatcmp.identity");
  out.report = {{"pair", r.pair}, {"K", K},           {"points", r.points},     {"fits", fits},
                {"C1", r.fitted_c1}, {"C2", r.fitted_c2}, {"identityResidual", r.identity_residual}, {"pass", out.pass}};
  std::ostringstream csv;
  csv.precision(17);
  csv << "t,x,diff,bound\n";
  for (double t : grid.t_grid())
    for (double x : grid.x_grid(V)) {
      const double d = heat::distance_to_complement(V, N, x);
      if (d < K) continue;
      const double diff = heat::kernel_1d(V, t, x, x) - heat::kernel_1d(N, t, x, x);
      const double bound = r.fitted_c2 > 0.0 ? r.fitted_c1 * std::exp(-d * d / (r.fitted_c2 * t)) : NAN;
      csv << t << ',' << x << ',' << diff << ',' << bound << '\n';
    }
  out.csv = csv.str();
  return out;
}

// anomaly
json anomaly_json(const anomaly::AnomalyCoefficients& a) {
  json j = {{"dim", a.dim}, {"u", a.u}, {"d", a.d}, {"sum", a.alternating_sum}, {"productLift", anomaly::product_lift(a.alternating_sum)}};
  j["psiTables"] = {{"psi", a.psi}};
  if (a.dim == 3) {
    j["psiTables"]["psiN"] = a.psi_n;
    j["psiTables"]["psiD"] = a.psi_d;
    j["meanCurvature"] = a.mean_curvature;
    j["cancellation"] = {{"secondDerivative", a.second_derivative_sum}, {"curvatureTerm", a.curvature_term_sum}};
  }
  return j;
}

Output run_anomaly(int dim, const std::string& family, double u, std::optional<std::string> sweep) {
  const auto F = anomaly::ConformalFamily::from_text(dim, family);
  Output out;
  if (sweep) {
    json rows = json::array();
    std::ostringstream csv;
    csv.precision(17);
    csv << "u,sum";
    for (int p = 0; p <= dim; ++p) csv << ",d" << p;
    csv << '\n';
    for (double v : parse_sweep(*sweep)) {
      const auto a = anomaly::anomaly_coefficients(F, v);
      rows.push_back(anomaly_json(a));
      csv << v << ',' << a.alternating_sum;
      for (double d : a.d) csv << ',' << d;
      csv << '\n';
    }
    out.report = {{"family", F.f().text()}, {"sweep", rows}};
    out.csv = csv.str();
    return out;
  }
  out.report = anomaly_json(anomaly::anomaly_coefficients(F, u));
  out.report["family"] = F.f().text();
  return out;
}

// jsj
bool is_census_file(const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return false;
  std::ifstream in(path);
  const json j = json::parse(in, nullptr, false);
  return j.is_object() && j.contains("manifolds");
}

// a census file gives one report per manifold
Output run_jsj(const std::string& input) {
  Output out;
  try {
    if (is_census_file(input)) {
      out.report["manifolds"] = json::array();
      for (const auto& m : jsj::load_census(input)) out.report["manifolds"].push_back(jsj::report(m));
    } else {
      out.report = jsj::report(jsj::load_manifest(input));
    }
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return out;
}

// selftest
Output run_selftest(const std::optional<std::string>& only, const RunConfig& cfg) {
  std::vector<acceptance::CriterionResult> results;
  if (only)
    results.push_back(acceptance::run_criterion(*only, cfg.seed));
  else
    results = acceptance::run_all(cfg.seed);
  Output out;
  json rows = json::array();
  auto row = [](const acceptance::CriterionResult& r) {
    return json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}};
  };
  for (const auto& r : results) {
    rows.push_back(row(r));
    for (const auto& p : r.parts) rows.push_back(row(p));
    out.pass = out.pass && r.pass;
  }
  out.report = {{"seed", cfg.seed}, {"criteria", rows}, {"pass", out.pass}};
  std::cerr << acceptance::format_table(results, true);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L2-torsion numerics: spectral density checks, zeta torsion, hyperbolic constants, heat kernels, anomalies, JSJ"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  std::optional<std::string> config_path;
  std::optional<std::string> output;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "JSON config file (seed, tolerances, output, format)");
  app.add_option("--output,-o", output, "write the report to this file instead of stdout");
  app.add_option("--format", format, "json (default), csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", seed, "seed; overrides the config file and L2TOR_SEED");

  auto* sdf_cmd = app.add_subcommand("sdf-check", "randomized spectral density function inequality suites");
  std::string suite = "all";
  std::size_t instances = 1000;
  int max_dim = 6;
  sdf_cmd->add_option("--suite", suite, "basic, block, short-exact, gromov-shubin, laplacian or all");
  sdf_cmd->add_option("--instances", instances, "random instances per suite")->check(CLI::PositiveNumber);
  sdf_cmd->add_option("--max-dim", max_dim, "largest space dimension")->check(CLI::Range(1, 12));

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta-regularized determinants and torsion");
  zeta_cmd->require_subcommand(1);
  auto* cim_cmd = zeta_cmd->add_subcommand("selftest-cim", "oracle selection of the constants c(i,m)");
  auto* det_cmd = zeta_cmd->add_subcommand("det", "zeta determinant of the circle or of a finite spectrum");
  std::optional<double> circle;
  std::optional<std::string> spectrum_file;
  det_cmd->add_option("--circle", circle, "circumference L")->check(CLI::PositiveNumber);
  det_cmd->add_option("--spectrum", spectrum_file, "JSON list of [eigenvalue, weight]");
  auto* tor_cmd = zeta_cmd->add_subcommand("torsion", "analytic torsion from per-degree finite spectra");
  std::string spectra_file;
  tor_cmd->add_option("--spectra", spectra_file, "JSON {\"degrees\": [{\"p\": p, \"spectrum\": [[ev, w], ...]}]}")->required();
  auto* dom_cmd = zeta_cmd->add_subcommand("domination", "large-time domination on random spectra");
  std::size_t probes = 10000;
  double eps = 0.5;
  dom_cmd->add_option("--probes", probes, "number of (spectrum, t) probes")->check(CLI::PositiveNumber);
  dom_cmd->add_option("--eps", eps, "cut for the double integral")->check(CLI::PositiveNumber);

  auto* hyp_cmd = app.add_subcommand("hyperbolic", "p-form heat densities and torsion constants of H^m");
  int m = 3, p = 0;
  std::string op = "constant";
  std::optional<std::string> table_path;
  std::vector<double> ts;
  double cross_section = 1.0, R = 0.0;
  hyp_cmd->add_option("--m", m, "dimension")->check(CLI::PositiveNumber);
  hyp_cmd->add_option("--op", op, "density, constant or cusp");
  hyp_cmd->add_option("--table", table_path, "Plancherel table JSON (default: shipped H^3 table)");
  hyp_cmd->add_option("--p", p, "form degree (density)");
  hyp_cmd->add_option("--t", ts, "times (density); default geometric grid on [1e-4, 10]");
  hyp_cmd->add_option("--cross-section", cross_section, "cusp cross-section volume")->check(CLI::PositiveNumber);
  hyp_cmd->add_option("--R", R, "cusp height");

  auto* heat_cmd = app.add_subcommand("heatcmp", "boundary insensitivity of 1-D heat kernels");
  std::string pair = "halfline-line";
  double K = 1.0, L = 3.0;
  heat_cmd->add_option("--pair", pair, "halfline-line or interval-halfline");
  heat_cmd->add_option("--K", K, "minimal distance to the complement")->check(CLI::NonNegativeNumber);
  heat_cmd->add_option("--L", L, "interval length")->check(CLI::PositiveNumber);

  auto* an_cmd = app.add_subcommand("anomaly", "metric anomaly of conformal families");
  int dim = 2;
  std::string family = "preset:paper";
  double u = 0.0;
  std::optional<std::string> sweep;
  an_cmd->add_option("--dim", dim, "2 or 3")->check(CLI::IsMember({2, 3}));
  an_cmd->add_option("--family,--f", family, "preset:paper or an expression in x and u");
  an_cmd->add_option("--u", u, "family parameter");
  an_cmd->add_option("--sweep", sweep, "u0:u1:n; CSV unless --format is given");

  auto* jsj_cmd = app.add_subcommand("jsj", "L2-torsion of a 3-manifold from its JSJ pieces");
  std::string input, jsj_report = "json";
  jsj_cmd->add_option("--input", input, "manifest (.json or .csv)")->required();
  jsj_cmd->add_option("--report", jsj_report, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* self_cmd = app.add_subcommand("selftest", "run the acceptance checks");
  std::optional<std::string> only;
  self_cmd->add_option("--only", only, "run a single criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    RunConfig cfg = load_config(config_path);
    if (seed) cfg.seed = *seed;
    if (output) cfg.output = *output;
    if (format) cfg.format = parse_format(*format);
    if (jsj_cmd->parsed() && jsj_report == "text") cfg.format = OutputFormat::Text;
    if (an_cmd->parsed() && sweep && !format) cfg.format = OutputFormat::Csv;

    Output out;
    if (sdf_cmd->parsed()) {
      if (suite != "all" && std::find(sdf::suite_names().begin(), sdf::suite_names().end(), suite) == sdf::suite_names().end())
        throw UsageError("unknown suite \"" + suite + "\"");
      out = run_sdf(suite, instances, max_dim, cfg);
    } else if (zeta_cmd->parsed()) {
      if (cim_cmd->parsed()) {
        out = run_zeta_cim();
        std::cerr << "c(i,m) = " << out.report["selected"].get<std::string>() << " for i != m, Euler's constant for i = m\n";
      } else if (det_cmd->parsed()) {
        out = run_zeta_det(circle, spectrum_file, cfg);
      } else if (tor_cmd->parsed()) {
        out = run_zeta_torsion(spectra_file);
      } else {
        out = run_zeta_domination(probes, eps, cfg);
      }
    } else if (hyp_cmd->parsed()) {
      out = run_hyperbolic(m, op, table_path, p, ts, cross_section, R, cfg);
    } else if (heat_cmd->parsed()) {
      out = run_heatcmp(pair, K, L, cfg);
    } else if (an_cmd->parsed()) {
      out = run_anomaly(dim, family, u, sweep);
    } else if (jsj_cmd->parsed()) {
      out = run_jsj(input);
    } else if (self_cmd->parsed()) {
      out = run_selftest(only, cfg);
    }
    emit(out, cfg);
    return out.pass ? 0 : kExitFail;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    // file access
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
