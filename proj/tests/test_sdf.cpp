#include "l2tor/sdf/checks.hpp"
#include "l2tor/sdf/suite.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

using namespace l2tor::sdf;

namespace {

TracedMap diagonal(const std::vector<double>& d, double normalization = 1.0) {
  const auto n = static_cast<Eigen::Index>(d.size());
  TracedSpace s(n, normalization);
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m(k, k) = d[static_cast<std::size_t>(k)];
  return TracedMap(s, s, m);
}

TracedMap scalar(double a) { return TracedMap(TracedSpace(1), TracedSpace(1), Matrix::Constant(1, 1, a)); }

}  // namespace

TEST_CASE("singular values are padded to the source dimension") {
  const TracedMap f(TracedSpace(3), TracedSpace(1), Matrix::Ones(1, 3));
  const auto sv = f.singular_values();
  REQUIRE(sv.size() == 3);
  CHECK(sv(0) == doctest::Approx(std::sqrt(3.0)));
  CHECK(sv(1) == 0.0);
  CHECK(sv(2) == 0.0);
  CHECK(f.rank() == 1);
  CHECK(f.kernel_dimension() == doctest::Approx(2.0));
}

TEST_CASE("spectral density of a diagonal map") {
  const auto f = diagonal({1.0, 2.0, 0.0}, 0.5);
  const auto F = sdf_of_map(f);
  CHECK(F(0.0) == doctest::Approx(0.5));
  CHECK(F(0.99) == doctest::Approx(0.5));
  CHECK(F(1.0) == doctest::Approx(1.0));
  CHECK(F(2.0) == doctest::Approx(1.5));
  CHECK(F(100.0) == doctest::Approx(1.5));
  const auto Fbar = reduced_sdf(f);
  CHECK(Fbar(0.0) == 0.0);
  CHECK(Fbar(2.0) == doctest::Approx(1.0));
}

TEST_CASE("spectral density is independent of the Gram form it is computed in") {
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    const auto U = random_space(rng, 4), V = random_space(rng, 3);
    const auto f = random_map(rng, U, V, random_rank(rng, 3));
    const auto sv = f.singular_values();
    const auto F = sdf_of_map(f);
    // orthonormal frames give the same singular values
    const Eigen::JacobiSVD<Matrix> svd(f.orthonormal_matrix());
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      CHECK(sv(i) == doctest::Approx(svd.singularValues()(i)).epsilon(1e-9));
    CHECK(F(1e6) == doctest::Approx(4.0));
    CHECK(F(0.0) == doctest::Approx(f.kernel_dimension()));
  }
}

TEST_CASE("variational characterisation agrees with the spectral density") {
  const auto f = diagonal({0.5, 3.0, 0.0, 1.5}, 0.25);
  for (double l : {0.0, 0.4, 0.5, 1.0, 1.5, 2.9, 3.0, 10.0})
    CHECK(variational_sdf(f, l) + f.kernel_dimension() == doctest::Approx(sdf_of_map(f)(l)));
}

TEST_CASE("probe decides step inequalities exactly") {
  const auto F = SpectralDensityFunction::counting({{1.0, 1.0}, {2.0, 1.0}});
  Inequality holds{"shift", {}, {}, Relation::LessEqual};
  holds.lhs.add(F);
  holds.rhs.add(F, 2.0);  // F(2 l) >= F(l)
  CHECK(probe(holds).violations.empty());

  Inequality fails{"reverse", {}, {}, Relation::LessEqual};
  fails.lhs.add(F, 2.0);
  fails.rhs.add(F);
  const auto r = probe(fails);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().lambda >= 0.5);
  CHECK(r.violations.front().lambda < 1.0);

  fails.upper = 0.5;  // F(2 l) = F(l) = 0 below 1/2
  CHECK(probe(fails).violations.empty());
}

TEST_CASE("complex SDF agrees with the rank formula") {
  Rng rng(11);
  for (int k = 0; k < 25; ++k) {
    const auto c = random_complex(rng, 3, 5, 0.5);
    for (int p = c.lowest_degree(); p <= c.highest_degree(); ++p) {
      const auto a = complex_sdf(c, p), b = complex_sdf_from_ranks(c, p);
      for (double l : {0.0, 0.05, 0.3, 1.0, 4.0, 20.0}) CHECK(a(l) == doctest::Approx(b(l)).epsilon(1e-9));
    }
  }
}

TEST_CASE("Laplacian spectrum splits into the two differentials") {
  Rng rng(13);
  for (int k = 0; k < 25; ++k) {
    const auto c = random_complex(rng, 4, 5);
    for (int p = c.lowest_degree(); p <= c.highest_degree(); ++p) {
      const auto d = laplacian_sdf_decomposition(c, p);
      CHECK(d.holds);
      CHECK(d.probes > 0);
    }
  }
}

TEST_CASE("betti numbers satisfy the Euler relation") {
  Rng rng(17);
  for (int k = 0; k < 20; ++k) {
    const auto c = random_complex(rng, 4, 5, 0.5);
    double chi_spaces = 0.0, chi_betti = 0.0;
    for (int p = c.lowest_degree(); p <= c.highest_degree(); ++p) {
      const double sign = (p % 2 == 0) ? 1.0 : -1.0;
      chi_spaces += sign * c.space(p).normalized_dimension();
      chi_betti += sign * c.betti(p);
    }
    CHECK(chi_betti == doctest::Approx(chi_spaces));
  }
}

TEST_CASE("composition and block inequalities hold on random instances") {
  for (const char* name : {"basic", "block", "short-exact", "laplacian"}) {
    SuiteConfig cfg;
    cfg.suite = name;
    cfg.seed = 5;
    cfg.instances = 60;
    cfg.max_dim = 5;
    const auto r = run_suite(cfg);
    INFO(name);
    CHECK(r.errors.empty());
    CHECK(r.violations.empty());
    CHECK(r.probes > 0);
  }
}

TEST_CASE("short exact constants are ordered") {
  Rng rng(23);
  for (int k = 0; k < 10; ++k) {
    const auto t = random_short_exact(rng, 3, 6);
    for (int p = 0; p < 3; ++p) {
      const auto c = short_exact_constants(t, p);
      CHECK(c.c_1 > 0.0);
      CHECK(c.c_1_proof > 0.0);
      CHECK(c.c_1_proof <= 1.0 / 16.0);
    }
  }
}

TEST_CASE("homotopy equivalences from the generator are exact") {
  Rng rng(29);
  for (int k = 0; k < 10; ++k) {
    const auto h = random_homotopy_equivalence(rng, 3, 4);
    CHECK(homotopy_residual(h) < 1e-10);
    for (int p = 0; p < 3; ++p)
      for (const auto& v : check_gromov_shubin(h, p).result.violations) CHECK(v.item != "gromov-shubin.derived");
  }
}

TEST_CASE("hand-built homotopy equivalence separates the two Gromov-Shubin forms") {
  // C: R -> R by 1, D: R -> R by 1/2, f = (1, 1/2), g = (1, 2), T = 0. F_0(C) jumps at 1,
  // F_0(D) at 1/2; |f_1|^2 |g_0|^2 = 1/4 is too small, 2 |f_1| |g_0| = 1 is enough.
  const TracedSpace R(1);
  const FiniteCochainComplex C({R, R}, {scalar(1.0)});
  const FiniteCochainComplex D({R, R}, {scalar(0.5)});
  const HomotopyEquivalence h{C, D, {scalar(1.0), scalar(0.5)}, {scalar(1.0), scalar(2.0)}, {}};
  REQUIRE(homotopy_residual(h) < 1e-14);
  const auto r = check_gromov_shubin(h, 0);
  std::vector<std::string> items;
  for (const auto& v : r.result.violations) items.push_back(v.item);
  CHECK(std::count(items.begin(), items.end(), "gromov-shubin") > 0);
  CHECK(std::count(items.begin(), items.end(), "gromov-shubin.derived") == 0);
  for (const auto& v : r.result.violations) {
    CHECK(v.lambda >= 1.0);
    CHECK(v.lambda < 4.0);
  }
}

TEST_CASE("suite report is deterministic for a seed") {
  SuiteConfig cfg;
  cfg.suite = "block";
  cfg.instances = 30;
  cfg.seed = 99;
  CHECK(to_json(run_suite(cfg)).dump() == to_json(run_suite(cfg)).dump());
  cfg.suite = "nope";
  CHECK_THROWS(run_suite(cfg));
}
