#include "l2tor/anomaly/conformal.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <random>

using namespace l2tor::anomaly;

namespace {

constexpr double kPi = 3.14159265358979323846;

ConformalFamily family(int dim, const std::string& f) { return ConformalFamily(dim, Expression::parse(f)); }

}  // namespace

TEST_CASE("Hodge star coefficients") {
  const auto F2 = ConformalFamily::from_text(2, "preset:paper");
  const auto star0 = hodge_star_conformal(F2, 0, 1.0, 0.5);
  REQUIRE(star0.size() == 1);
  CHECK(star0[0].coefficient.value() == doctest::Approx(1.5));
  const auto flat = hodge_star_conformal(family(2, "1"), 1, 0.3, 0.2);
  for (const auto& e : flat) {
    CHECK(std::abs(e.sign) == 1.0);
    CHECK(e.coefficient.value() == doctest::Approx(1.0));
  }
  const auto F3 = family(3, "1+x+u*x");
  const auto top = hodge_star_conformal(F3, 3, 0.4, 0.7);
  const double f = 1.0 + 0.4 + 0.7 * 0.4;
  CHECK(top[0].coefficient.value() == doctest::Approx(std::pow(f, -3.0)));
  CHECK_THROWS_AS(hodge_star_conformal(F3, 4, 0.0, 0.0), std::out_of_range);
}

TEST_CASE("V operator") {
  const auto F2 = ConformalFamily::from_text(2, "preset:paper");
  CHECK(v_operator(F2, 0, 1.0, 0.0) == doctest::Approx(-1.0));
  for (double x : {0.0, 0.5, 2.0}) {
    CHECK(v_operator(F2, 1, x, 0.3) == 0.0);
    CHECK(v_operator(F2, 0, x, 0.3) == doctest::Approx(-v_operator(F2, 2, x, 0.3)));
  }
  const auto F3 = family(3, "1+x+u*x");
  for (int p = 0; p <= 3; ++p) CHECK(v_operator(F3, p, 0.8, 0.4) == doctest::Approx(-v_operator(F3, 3 - p, 0.8, 0.4)));
}

TEST_CASE("closed form and differentiated star agree on random families") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coef(-0.5, 0.5), pt(0.0, 1.0);
  for (int k = 0; k < 40; ++k) {
    const std::string f = "1 + " + std::to_string(coef(rng)) + "*x*u + " + std::to_string(coef(rng)) +
                          "*sin(x)^2 + 0.3*exp(" + std::to_string(coef(rng)) + "*u*x)";
    for (int dim : {2, 3}) {
      const auto F = family(dim, f);
      for (int p = 0; p <= dim; ++p) {
        const double x = pt(rng), u = pt(rng);
        const auto a = v_closed_form(F, p, x, u), b = v_from_star(F, p, x, u);
        for (int d = 0; d <= 2; ++d) CHECK(a.derivative(d, 0) == doctest::Approx(b.derivative(d, 0)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("anomaly coefficients in dimension 2") {
  const auto a = anomaly_coefficients(ConformalFamily::from_text(2, "preset:paper"), 0.0);
  CHECK(a.d[0] == doctest::Approx(-1.0 / (8.0 * kPi)).epsilon(1e-13));
  CHECK(a.d[1] == 0.0);
  CHECK(a.d[2] == doctest::Approx(-1.0 / (8.0 * kPi)).epsilon(1e-13));
  CHECK(a.alternating_sum == doctest::Approx(-1.0 / (4.0 * kPi)).epsilon(1e-13));
  CHECK(product_lift(a.alternating_sum) == doctest::Approx(-1.0 / (2.0 * kPi)));
  CHECK(product_lift(0.0) == 0.0);
}

TEST_CASE("anomaly coefficients in dimension 3") {
  const auto F = ConformalFamily::from_text(3, "preset:paper");
  for (double u : {0.0, 0.25, 2.0}) {
    const auto a = anomaly_coefficients(F, u);
    CHECK(a.mean_curvature == doctest::Approx(2.0 * (1.0 + u)));
    double alt = 0.0;
    for (std::size_t p = 0; p < a.d.size(); ++p) alt += (p % 2 == 0 ? 1.0 : -1.0) * a.d[p];
    CHECK(std::abs(a.alternating_sum - alt) < 1e-12);
    CHECK(a.alternating_sum == doctest::Approx(-(1.0 + u) / (4.0 * kPi)).epsilon(1e-12));
    CHECK(std::abs(a.second_derivative_sum) < 1e-12);
    CHECK(std::abs(a.curvature_term_sum) < 1e-12);
    CHECK(product_lift(a.alternating_sum) == doctest::Approx(-(1.0 + u) / (2.0 * kPi)));
  }
  CHECK(mean_curvature(family(3, "2 + u"), 0.3) == 0.0);
}

TEST_CASE("u-independent family has no anomaly") {
  for (int dim : {2, 3}) {
    const auto a = anomaly_coefficients(family(dim, "1+x+x^2"), 0.4);
    for (double d : a.d) CHECK(d == 0.0);
  }
}

TEST_CASE("non-stationary families and bad factors are rejected") {
  CHECK_THROWS_AS(anomaly_coefficients(family(2, "1+u"), 0.1), std::invalid_argument);
  CHECK_THROWS_AS(anomaly_coefficients(family(3, "exp(u)+x"), 0.1), std::invalid_argument);
  CHECK_THROWS_AS(family(2, "x-1").conformal_factor(0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(ConformalFamily::from_text(4, "1"), std::invalid_argument);
}

TEST_CASE("expression parser") {
  CHECK(Expression::parse("2*pi - e^2 / 4")(0, 0) == doctest::Approx(2 * kPi - std::exp(2.0) / 4));
  CHECK(Expression::parse("-x^2")(3.0, 0) == doctest::Approx(-9.0));
  CHECK(Expression::parse("cosh(x)^2 - sinh(x)^2")(0.7, 0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(Expression::parse("1+ux"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("(1+x"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse("foo(x)"), std::invalid_argument);
  CHECK_THROWS_AS(Expression::parse(""), std::invalid_argument);
  try {
    Expression::parse("1+ux");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("ux") != std::string::npos);
  }
}

TEST_CASE("jet derivatives match finite differences") {
  const auto f = Expression::parse("exp(x*u) + sin(x)^2 * sqrt(1+u) + log(2+x)");
  const double x = 0.4, u = 0.3, h = 1e-4;
  const auto j = f.evaluate(x, u);
  CHECK(j.derivative(1, 0) == doctest::Approx((f(x + h, u) - f(x - h, u)) / (2 * h)).epsilon(1e-7));
  CHECK(j.derivative(2, 0) == doctest::Approx((f(x + h, u) - 2 * f(x, u) + f(x - h, u)) / (h * h)).epsilon(1e-5));
  CHECK(j.derivative(0, 1) == doctest::Approx((f(x, u + h) - f(x, u - h)) / (2 * h)).epsilon(1e-7));
  const double mixed = (f(x + h, u + h) - f(x + h, u - h) - f(x - h, u + h) + f(x - h, u - h)) / (4 * h * h);
  CHECK(j.derivative(1, 1) == doctest::Approx(mixed).epsilon(1e-5));
  CHECK(j.du().derivative(1, 0) == doctest::Approx(j.derivative(1, 1)));
}
