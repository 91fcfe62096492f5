#include "l2tor/heat/kernel1d.hpp"
#include "l2tor/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace l2tor::heat;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("diagonal values") {
  for (double t : {1e-3, 0.1, 2.0}) {
    CHECK(kernel_1d(Domain1D::line(), t, 0.3, 0.3) == doctest::Approx(1.0 / std::sqrt(4.0 * kPi * t)));
    for (double x : {0.0, 0.2, 1.5}) {
      const double neu = (1.0 + std::exp(-x * x / t)) / std::sqrt(4.0 * kPi * t);
      CHECK(kernel_1d(Domain1D::half_line_neumann(), t, x, x) == doctest::Approx(neu).epsilon(1e-13));
      const double dir = (1.0 - std::exp(-x * x / t)) / std::sqrt(4.0 * kPi * t);
      CHECK(kernel_1d(Domain1D::half_line_dirichlet(), t, x, x) == doctest::Approx(dir).scale(1.0));
    }
  }
}

TEST_CASE("circle trace equals the theta series") {
  const double L = 2.5;
  const auto D = Domain1D::circle(L);
  for (double t : {0.01, 0.3, 2.0}) {
    const auto tr = l2tor::quad::integrate([&](double x) { return kernel_1d(D, t, x, x); }, 0.0, L);
    double theta = 1.0;
    for (int n = 1; n < 200; ++n) theta += 2.0 * std::exp(-t * std::pow(2.0 * kPi * n / L, 2));
    CHECK(std::abs(tr.value - theta) < 1e-10 * theta);
  }
}

TEST_CASE("symmetry and semigroup") {
  for (const auto& D : {Domain1D::interval_neumann(1.7), Domain1D::circle(2.0)}) {
    for (double x : {0.1, 0.9}) {
      for (double y : {0.0, 0.5, 1.4}) {
        CHECK(std::abs(kernel_1d(D, 0.2, x, y) - kernel_1d(D, 0.2, y, x)) < 1e-12);
        const auto conv = l2tor::quad::integrate(
            [&](double z) { return kernel_1d(D, 0.15, x, z) * kernel_1d(D, 0.25, z, y); }, D.lower(), D.upper());
        CHECK(conv.value == doctest::Approx(kernel_1d(D, 0.4, x, y)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("mass") {
  const double inf = std::numeric_limits<double>::infinity();
  for (double x : {0.0, 0.4, 2.0}) {
    const auto neu = l2tor::quad::integrate([&](double y) { return kernel_1d(Domain1D::half_line_neumann(), 0.5, x, y); }, 0.0, inf);
    CHECK(neu.value == doctest::Approx(1.0).epsilon(1e-9));
    const auto dir = l2tor::quad::integrate([&](double y) { return kernel_1d(Domain1D::half_line_dirichlet(), 0.5, x, y); }, 0.0, inf);
    CHECK(dir.value < 1.0);
  }
  const auto D = Domain1D::interval_neumann(1.0);
  const auto m = l2tor::quad::integrate([&](double y) { return kernel_1d(D, 3.0, 0.2, y); }, 0.0, 1.0);
  CHECK(m.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(kernel_1d(D, 1.0, 2.0, 0.5), std::invalid_argument);
}

TEST_CASE("sup bound") {
  const auto line = sup_bound_check(Domain1D::line(), 0.01);
  CHECK(line.sup == doctest::Approx(1.0 / std::sqrt(4.0 * kPi * 0.01)));
  CHECK(line.attained_at_t0);
  const auto half = sup_bound_check(Domain1D::half_line_neumann(), 0.01);
  CHECK(half.sup == doctest::Approx(2.0 / std::sqrt(4.0 * kPi * 0.01)));
  CHECK(half.diagonal == doctest::Approx(half.sup));
}

TEST_CASE("boundary insensitivity: half-line in line") {
  const auto r = boundary_insensitivity_check(Domain1D::half_line_neumann(), Domain1D::line(), 0.5);
  CHECK(r.ok());
  CHECK(r.identity_violations == 0);
  CHECK(r.identity_residual < 1e-12);
  CHECK(r.points > 0);
  CHECK(r.fitted_c2 == 1.0);
  CHECK(r.fitted_c1 == doctest::Approx(1.0 / std::sqrt(4.0 * kPi * 1e-4)).epsilon(1e-6));
  CHECK(distance_to_complement(Domain1D::half_line_neumann(), Domain1D::line(), 0.7) == 0.7);
  CHECK(std::isinf(distance_to_complement(Domain1D::line(), Domain1D::line(), 0.7)));
  CHECK_THROWS_AS(distance_to_complement(Domain1D::line(), Domain1D::half_line_neumann(), 0.7), std::invalid_argument);
}

TEST_CASE("boundary insensitivity: interval in half-line") {
  const auto r = boundary_insensitivity_check(Domain1D::interval_neumann(3.0), Domain1D::half_line_neumann(), 1.0);
  CHECK(r.ok());
  CHECK(r.points > 0);
  const auto prof = c1_profile(Domain1D::interval_neumann(3.0), Domain1D::half_line_neumann(), {0.25, 0.5, 1.0, 2.0}, r.fitted_c2);
  for (std::size_t k = 1; k < prof.size(); ++k) CHECK(prof[k] <= prof[k - 1] * (1.0 + 1e-12));
}
