#include "l2tor/zeta/cim.hpp"
#include "l2tor/zeta/domination.hpp"
#include "l2tor/zeta/torsion.hpp"

#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace l2tor::zeta;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("spectrum bookkeeping") {
  const Spectrum s({{3.0, 1.0}, {0.0, 0.5}, {1.0, 2.0}});
  CHECK(s.kernel_weight() == 0.5);
  CHECK(s.perp_weight() == 3.0);
  CHECK(s.gap() == 1.0);
  CHECK(s.largest() == 3.0);
  CHECK(s.heat_trace(1.0, false) == doctest::Approx(s.heat_trace(1.0) + 0.5).epsilon(1e-15));
  CHECK_THROWS_AS(s.heat_trace(0.0), std::invalid_argument);
  CHECK(s.heat_trace(1.0) == doctest::Approx(std::exp(-3.0) + 2.0 * std::exp(-1.0)).epsilon(1e-15));
  const auto F = s.counting_function();
  CHECK(F(0.5) == 0.0);
  CHECK(F(1.0) == 2.0);
  CHECK(F(10.0) == 3.0);
  CHECK(Spectrum().gap() == std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(Spectrum({{-1.0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum({{1.0, -1.0}}), std::invalid_argument);
  CHECK(s.disjoint_union(s).perp_weight() == 6.0);
}

TEST_CASE("d_small of a single eigenvalue matches the exponential integral") {
  // int_0^1 (e^{-t l} - 1) dt/t + gamma = -E1(l) - ln l
  for (double l : {0.3, 1.0, 2.0, 4.5}) {
    const double expected = -boost::math::expint(1, l) - std::log(l);
    CHECK(d_small(HeatTraceModel::from_spectrum(Spectrum({{l, 1.0}}))).value == doctest::Approx(expected).epsilon(1e-12));
  }
  // mpmath: -E1(1)
  CHECK(d_small(HeatTraceModel::from_spectrum(Spectrum({{1.0, 1.0}}))).value ==
        doctest::Approx(-0.21938393439552027).epsilon(1e-13));
}

TEST_CASE("zeta determinant of a finite spectrum is the weighted product") {
  CHECK(zeta_det(Spectrum({{2.0, 1.0}, {3.0, 2.0}})).value == doctest::Approx(18.0).epsilon(1e-12));
  CHECK(zeta_det(Spectrum({{std::exp(1.0), 1.0}})).value == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(zeta_det(Spectrum({{0.5, 0.25}, {7.0, 1.0 / 3.0}})).value ==
        doctest::Approx(std::pow(0.5, 0.25) * std::pow(7.0, 1.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("circle determinant") {
  // zeta(s) = 2 (L / 2 pi)^{2s} zeta_R(2s): zeta'(0) = -2 ln L; mpmath values frozen
  CHECK(zeta_derivative_at_zero(HeatTraceModel::circle(1.0)).value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(zeta_derivative_at_zero(HeatTraceModel::circle(2.0 * kPi)).value ==
        doctest::Approx(-3.6757541328186910).epsilon(1e-12));
  CHECK(zeta_derivative_at_zero(HeatTraceModel::circle(5.0)).value == doctest::Approx(-3.2188758248682007).epsilon(1e-12));
  for (double L : {1.0, 2.0 * kPi, 5.0, 0.3, 12.0}) CHECK(std::abs(zeta_det(HeatTraceModel::circle(L)).value - L * L) <= 1e-8 * L * L);
}

TEST_CASE("circle heat trace matches the eigenvalue sum") {
  const double L = 3.0;
  const auto h = HeatTraceModel::circle(L);
  const double step = (2.0 * kPi / L) * (2.0 * kPi / L);
  for (double t : {0.01, 0.2, 0.23, 1.0, 5.0}) {
    double eig = 0.0;
    for (int n = 1; n < 400; ++n) eig += 2.0 * std::exp(-t * step * n * n);
    CHECK(h(t) == doctest::Approx(eig).epsilon(1e-12));
  }
  const auto z = HeatTraceModel::circle(L, true);
  CHECK(z(0.7) == doctest::Approx(h(0.7) + 1.0).epsilon(1e-14));
}

TEST_CASE("c(i,m) constants") {
  const auto& t = cim_self_test();
  CHECK(t.unique);
  CHECK(t.selected == CimConvention::Derived);
  CHECK(t.residual_derived < 1e-10);
  CHECK(t.residual_literal > 1e-2);
  CHECK(c_im(3, 3) == kEulerGamma);
  // 1/Gamma(s) = s + gamma s^2 + O(s^3), so d/ds [1/(Gamma(s) (s - n/2))] at 0 is -2/n; checked by a
  // central difference of boost's tgamma
  for (int n = 1; n <= 4; ++n) {
    auto g = [n](double s) { return 1.0 / (boost::math::tgamma(s) * (s - 0.5 * n)); };
    const double h = 1e-5;
    const double fd = (g(h) - g(-h)) / (2 * h);
    CHECK(c_im(0, n) == doctest::Approx(fd).epsilon(1e-8));
    CHECK(c_im(0, n) == doctest::Approx(-2.0 / n));
  }
}

TEST_CASE("power_sum expansion and large-time integral") {
  const auto h = HeatTraceModel::power_sum(1, {{1.0, -0.5}});
  CHECK(*h.coefficients[0] == 1.0);
  CHECK(*h.coefficients[1] == 0.0);
  const auto lt = large_time_integral(h);
  REQUIRE(lt.determinant_class == DeterminantClass::Yes);
  CHECK(*lt.value == doctest::Approx(2.0).epsilon(1e-10));
  // the pure power is its own expansion: d_small is c(0,1) a_0 = -2
  CHECK(d_small(h).value == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(zeta_derivative_at_zero(h).value == doctest::Approx(0.0).epsilon(1e-10));
  CHECK_THROWS_AS(HeatTraceModel::power_sum(0, {{1.0, -0.5}}), std::invalid_argument);
}

TEST_CASE("determinant class decisions") {
  const auto slow = HeatTraceModel::from_function("slow", 0, [](double t) { return 1.0 / std::log(t + std::exp(1.0)); });
  CHECK(large_time_integral(slow).determinant_class == DeterminantClass::No);
  const auto opaque = HeatTraceModel::from_function("opaque", 0, [](double t) { return std::exp(-t); });
  CHECK(large_time_integral(opaque).determinant_class == DeterminantClass::Unknown);
  CHECK_THROWS_AS(d_small(opaque), std::invalid_argument);
  CHECK_THROWS_AS(analytic_torsion({{1, slow}}), std::invalid_argument);
}

TEST_CASE("d_small rejects a wrong expansion") {
  auto h = HeatTraceModel::power_sum(1, {{1.0, -0.5}});
  h.coefficients[1] = 0.5;  // theta - expansion -> -0.5 as t -> 0
  h.remainder_integral = nullptr;
  CHECK_THROWS_AS(d_small(h), std::invalid_argument);
}

TEST_CASE("analytic torsion of finite spectra") {
  // sum (-1)^p p zeta_p'(0) with zeta_p'(0) = -sum w ln l
  const auto t = analytic_torsion({{0, HeatTraceModel::from_spectrum(Spectrum({{2.0, 1.0}}))},
                                   {1, HeatTraceModel::from_spectrum(Spectrum({{2.0, 1.0}, {5.0, 1.0}}))},
                                   {2, HeatTraceModel::from_spectrum(Spectrum({{5.0, 1.0}}))}});
  const double expected = -1.0 * -(std::log(2.0) + std::log(5.0)) + 2.0 * -std::log(5.0);
  CHECK(t.total == doctest::Approx(expected).epsilon(1e-12));
  CHECK(cheeger_mueller_correction(2) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("asymptotic fit recovers the circle coefficients") {
  const double L = 2.0;
  const auto fit = asympt_fit(HeatTraceModel::circle(L), log_grid(1e-4, 1e-2, 30));
  REQUIRE(fit.coefficients.size() == 2);
  CHECK(fit.coefficients[0] == doctest::Approx(L / std::sqrt(4.0 * kPi)).epsilon(1e-9));
  CHECK(fit.coefficients[1] == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK_FALSE(fit.ill_conditioned);
  CHECK_THROWS_AS(asympt_fit(HeatTraceModel::circle(L), {0.5}), std::invalid_argument);
}

TEST_CASE("step-function Laplace transform") {
  // F = w [l >= a]: int_0^eps e^{-tl} F dl = w (e^{-ta} - e^{-t eps}) / t
  const auto F = l2tor::sdf::SpectralDensityFunction::counting({{0.2, 1.5}});
  for (double t : {1.0, 3.0, 40.0}) CHECK(laplace_of_step(F, 0.7, t) == doctest::Approx(1.5 * (std::exp(-0.2 * t) - std::exp(-0.7 * t)) / t));
  CHECK(laplace_of_step(F, 0.1, 2.0) == 0.0);
}

TEST_CASE("large-time domination on random spectra") {
  const auto r = random_domination_suite(11, 3000);
  CHECK(r.probes == 3000);
  CHECK(r.violations.empty());
  CHECK_THROWS_AS(large_time_dominating_bound(Spectrum({{1.0, 1.0}}), 0.5, {0.5}), std::invalid_argument);
}

TEST_CASE("double integral for G = l^1/2 + l^1/4") {
  // lower incomplete gamma values from mpmath
  const double closed[] = {2.8175907127429901, 4.2790651135235901, 4.8730026446532637};
  const double bound[] = {4.4111986932624366, 6.1380589884249624, 6.7587087580568192};
  const double eps[] = {0.1, 0.5, 1.0};
  for (int k = 0; k < 3; ++k) {
    const auto d = power_bound_double_integral(eps[k]);
    CHECK(d.finite);
    CHECK(d.value.value == doctest::Approx(closed[k]).epsilon(1e-10));
    CHECK(d.closed_form == doctest::Approx(closed[k]).epsilon(1e-13));
    CHECK(d.bound == doctest::Approx(bound[k]).epsilon(1e-13));
    CHECK(d.value.value <= d.bound);
  }
}
