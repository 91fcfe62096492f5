#include "l2tor/hyperbolic/cusp.hpp"
#include "l2tor/hyperbolic/plancherel.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <fstream>

using namespace l2tor::hyperbolic;

namespace {

constexpr double kPi = 3.14159265358979323846;

nlohmann::json shipped_json() {
  std::ifstream in(std::string(L2TOR_DATA_DIR) + "/plancherel_h3.json");
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("shipped H3 table passes its structural checks") {
  const auto& t = PlancherelTable::shipped_h3();
  CHECK(t.m() == 3);
  CHECK(t.validation().ok);
  CHECK(t.validation().duality_residual < 1e-12);
  CHECK(t.validation().euler_residual < 1e-12);
  CHECK(t.row(1).components.size() == 2);
  CHECK_THROWS_AS(t.row(4), std::out_of_range);
}

TEST_CASE("scalar heat density") {
  const auto& t = PlancherelTable::shipped_h3();
  for (double s : {1e-3, 0.1, 1.0, 3.0, 8.0}) {
    const double expected = std::exp(-s) / std::pow(4.0 * kPi * s, 1.5);
    CHECK(heat_density(t, 0, s) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(heat_density_closed_form(t, 0, s) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("densities: duality, leading term, monotonicity") {
  const auto& t = PlancherelTable::shipped_h3();
  for (double s : {1e-4, 0.01, 0.5, 2.0}) {
    CHECK(heat_density(t, 1, s) == doctest::Approx(heat_density(t, 2, s)).epsilon(1e-12));
    CHECK(heat_density(t, 0, s) == doctest::Approx(heat_density(t, 3, s)).epsilon(1e-12));
  }
  const double s = 1e-4, free = 3.0 / std::pow(4.0 * kPi * s, 1.5);
  CHECK(std::abs(heat_density(t, 1, s) / free - 1.0) < 1e-3);
  // mixtures of decaying exponentials: decreasing and log-convex in t
  for (int p = 0; p <= 3; ++p) {
    double t_prev = 0.01, prev = heat_density(t, p, t_prev), prev_slope = -1e300;
    for (double x = 0.02; x < 6.0; x *= 1.6) {
      const double k = heat_density(t, p, x);
      CHECK(k < prev);
      const double slope = (std::log(k) - std::log(prev)) / (x - t_prev);
      CHECK(slope >= prev_slope - 1e-9);
      prev_slope = slope;
      prev = k;
      t_prev = x;
    }
  }
}

TEST_CASE("torsion constant in dimension 3") {
  // T = zeta_coexact'(0) - 2 zeta_0'(0) with zeta_0'(0) = 1/(6 pi) and zeta_coexact'(0) = 0
  const auto& t = PlancherelTable::shipped_h3();
  const double c = torsion_constant(t);
  CHECK(c == doctest::Approx(-1.0 / (3.0 * kPi)).epsilon(1e-6));
  CHECK(std::abs(torsion_constant(t, 8) - c) < 1e-8);
  CHECK(torsion_constant(3) == doctest::Approx(c).epsilon(1e-12));
  CHECK(torsion_constant(2) == 0.0);
  CHECK(torsion_constant(4) == 0.0);
  CHECK_THROWS_AS(torsion_constant(5), std::invalid_argument);
}

TEST_CASE("heat model expansion matches the density") {
  const auto& t = PlancherelTable::shipped_h3();
  const auto h = heat_model(t, 0);
  REQUIRE(h.coefficients_known());
  CHECK(std::abs(h.remainder(1e-6)) < 1e-3);
  CHECK(h.gap.has_value());
  const auto h1 = heat_model(t, 1);
  CHECK_FALSE(h1.gap.has_value());
  REQUIRE(h1.power_law.has_value());
  CHECK(h1.power_law->alpha == doctest::Approx(0.5));
}

TEST_CASE("malformed tables are rejected") {
  {
    auto j = shipped_json();
    j["degrees"][2]["components"][0]["mu"][2] = 0.2;  // breaks duality
    CHECK_THROWS_AS(PlancherelTable::from_json(j), std::invalid_argument);
  }
  {
    auto j = shipped_json();
    j["degrees"].erase(3);
    CHECK_THROWS_AS(PlancherelTable::from_json(j), std::invalid_argument);
  }
  {
    auto j = shipped_json();
    j["m"] = 4;
    CHECK_THROWS_AS(PlancherelTable::from_json(j), std::invalid_argument);
  }
  {
    auto j = shipped_json();
    j["degrees"][0]["components"][0]["sigma"] = -1.0;
    CHECK_THROWS_AS(PlancherelTable::from_json(j), std::invalid_argument);
  }
  CHECK_NOTHROW(PlancherelTable::from_json(shipped_json()));
}

TEST_CASE("cusp volumes") {
  CHECK(cusp_volume(CuspEnd{1.0, 0.0}, 3) == doctest::Approx(0.5));
  CHECK(cusp_volume(CuspEnd{2.0, 0.0}, 3, 1.0) == doctest::Approx(std::exp(-2.0)));
  for (int m : {2, 3, 5})
    CHECK(cusp_volume(CuspEnd{1.3, 0.0}, m, 0.7) / cusp_volume(CuspEnd{1.3, 0.0}, m, 0.0) ==
          doctest::Approx(std::exp(-(m - 1) * 0.7)));
  CHECK(cusp_volume(CuspEnd{1.0, 0.0}, 3, std::numeric_limits<double>::infinity()) == 0.0);
  CHECK_THROWS_AS(cusp_volume(CuspEnd{}, 1), std::invalid_argument);

  const std::vector<CuspEnd> ends{{1.0, 0.0}, {0.5, 0.0}};
  const double total = 2.0;
  for (double R : {0.0, 0.5, 2.0}) {
    double cusps = 0.0;
    for (const auto& e : ends) cusps += cusp_volume(e, 3, R);
    CHECK(std::abs(truncated_volume(total, ends, R, 3) + cusps - total) < 1e-12);
  }
  CHECK_THROWS_AS(truncated_volume(0.1, ends, 0.0, 3), std::invalid_argument);
}
