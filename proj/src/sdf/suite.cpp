#include "l2tor/sdf/suite.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace l2tor::sdf {

namespace {

constexpr std::array<double, 4> kNormalizations{1.0, 0.5, 1.0 / 3.0, 1.0 / 6.0};
constexpr std::array<double, 3> kExponents{0.25, 0.5, 0.75};

double pick_normalization(Rng& rng) { return kNormalizations[static_cast<std::size_t>(random_int(rng, 0, 3))]; }
double pick_r(Rng& rng) { return kExponents[static_cast<std::size_t>(random_int(rng, 0, 2))]; }

void absorb(SuiteReport& out, const CheckReport& r, std::size_t instance, int degree) {
  out.probes += r.result.probes;
  out.max_excess = std::max(out.max_excess, r.result.max_excess);
  for (const auto& v : r.result.violations) out.violations.push_back({instance, degree, v});
  for (const auto& c : r.checked) ++out.checked[c];
  for (const auto& s : r.skipped) ++out.skipped[s];
}

void basic_instance(SuiteReport& out, Rng& rng, std::size_t k, int max_dim) {
  const double w = pick_normalization(rng);
  auto dim = [&] { return static_cast<Eigen::Index>(random_int(rng, 1, max_dim)); };
  const TracedSpace U = random_space(rng, dim(), w);
  const TracedSpace V = random_space(rng, dim(), w);
  const TracedSpace W = random_space(rng, dim(), w);
  const TracedSpace V2 = random_space(rng, random_int(rng, static_cast<int>(V.dim()), max_dim), w);
  const TracedSpace U0 = random_space(rng, random_int(rng, static_cast<int>(U.dim()), max_dim), w);
  const TracedMap f = random_map(rng, U, V, random_rank(rng, std::min(U.dim(), V.dim())));
  const TracedMap g = random_map(rng, V, W, random_rank(rng, std::min(V.dim(), W.dim())));
  const TracedMap i = random_map(rng, V, V2, V.dim());
  const TracedMap p = random_map(rng, U0, U, U.dim());
  absorb(out, check_basic_F(f, g, i, p, pick_r(rng)), k, -1);
}

void block_instance(SuiteReport& out, Rng& rng, std::size_t k, int max_dim) {
  const double w = pick_normalization(rng);
  const int half = std::max(1, max_dim / 2);
  auto dim = [&] { return static_cast<Eigen::Index>(random_int(rng, 1, half)); };
  const TracedSpace U1 = random_space(rng, dim(), w);
  const bool square = random_int(rng, 0, 2) == 0;
  const TracedSpace V1 = random_space(rng, square ? U1.dim() : dim(), w);
  const TracedSpace U2 = random_space(rng, dim(), w);
  const TracedSpace V2 = random_space(rng, dim(), w);
  const TracedMap phi = random_map(rng, U1, V1, random_rank(rng, std::min(U1.dim(), V1.dim())));
  const TracedMap gamma = random_map(rng, U2, V1, random_rank(rng, std::min(U2.dim(), V1.dim())));
  const TracedMap xi = random_map(rng, U2, V2, random_rank(rng, std::min(U2.dim(), V2.dim())));
  absorb(out, check_block_matrix_F(phi, gamma, xi, pick_r(rng)), k, -1);
}

void short_exact_instance(SuiteReport& out, Rng& rng, std::size_t k, int max_dim) {
  const double w = pick_normalization(rng);
  const ShortExactTriple t = random_short_exact(rng, 3, 2 * max_dim, w);
  for (int p = t.D().lowest_degree(); p <= t.D().highest_degree(); ++p) absorb(out, check_short_exact(t, p), k, p);
}

void gromov_shubin_instance(SuiteReport& out, Rng& rng, std::size_t k, int max_dim) {
  const double w = pick_normalization(rng);
  const HomotopyEquivalence h = random_homotopy_equivalence(rng, 3, max_dim, w);
  for (int p = h.C.lowest_degree(); p <= h.C.highest_degree(); ++p) absorb(out, check_gromov_shubin(h, p), k, p);
}

void laplacian_instance(SuiteReport& out, Rng& rng, std::size_t k, int max_dim) {
  const double w = pick_normalization(rng);
  const FiniteCochainComplex c = random_complex(rng, random_int(rng, 2, 4), max_dim, w);
  for (int p = c.lowest_degree(); p <= c.highest_degree(); ++p) {
    const LaplacianDecomposition d = laplacian_sdf_decomposition(c, p);
    out.probes += d.probes;
    out.max_excess = std::max(out.max_excess, d.max_residual);
    ++out.checked["laplacian"];
    if (!d.holds)
      for (std::size_t n = 0; n < d.lambdas.size(); ++n)
        out.violations.push_back({k, p, {"laplacian", d.lambdas[n], d.residuals[n], 0.0}});
    const auto a = complex_sdf(c, p);
    const auto b = complex_sdf_from_ranks(c, p);
    Inequality q;
    q.item = "complex-sdf-routes";
    q.relation = Relation::Equal;
    q.lhs.add(a);
    q.rhs.add(b);
    CheckReport r;
    r.checked.push_back(q.item);
    r.result = probe(q);
    absorb(out, r, k, p);
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"basic", "block", "short-exact", "gromov-shubin", "laplacian"};
  return names;
}

SuiteReport run_suite(const SuiteConfig& config) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), config.suite) == names.end())
    throw std::invalid_argument("unknown suite '" + config.suite + "'");
  if (config.max_dim < 1) throw std::invalid_argument("max-dim must be at least 1");

  SuiteReport out;
  out.config = config;
  for (std::size_t k = 0; k < config.instances; ++k) {
    Rng rng(derive_seed(config.seed, k));
    try {
      if (config.suite == "basic")
        basic_instance(out, rng, k, config.max_dim);
      else if (config.suite == "block")
        block_instance(out, rng, k, config.max_dim);
      else if (config.suite == "short-exact")
        short_exact_instance(out, rng, k, config.max_dim);
      else if (config.suite == "gromov-shubin")
        gromov_shubin_instance(out, rng, k, config.max_dim);
      else
        laplacian_instance(out, rng, k, config.max_dim);
    } catch (const std::exception& e) {
      out.errors.push_back("instance " + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json j;
  j["suite"] = r.config.suite;
  j["seed"] = r.config.seed;
  j["instances"] = r.config.instances;
  j["max_dim"] = r.config.max_dim;
  j["probes"] = r.probes;
  j["max_excess"] = r.max_excess;
  j["checked"] = r.checked;
  j["skipped"] = r.skipped;
  nlohmann::json v = nlohmann::json::array();
  for (const auto& s : r.violations)
    v.push_back({{"instance", s.instance},
                 {"degree", s.degree},
                 {"item", s.violation.item},
                 {"lambda", s.violation.lambda},
                 {"lhs", s.violation.lhs},
                 {"rhs", s.violation.rhs}});
  j["violations"] = v;
  j["errors"] = r.errors;
  j["ok"] = r.ok();
  return j;
}

}  // namespace l2tor::sdf
