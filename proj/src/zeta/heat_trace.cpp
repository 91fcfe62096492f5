#include "l2tor/zeta/heat_trace.hpp"

#include "l2tor/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace l2tor::zeta {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Ein(x) = int_0^x (1 - e^-u) du / u, by its power series (|x| <= 1 in practice)
quad::Estimate ein_series(double x) {
  double sum = 0.0, term = 1.0, last = 0.0;
  for (int n = 1; n < 200; ++n) {
    term *= x / n;  // x^n / n!
    last = (n % 2 ? 1.0 : -1.0) * term / n;
    sum += last;
    if (std::abs(last) < 1e-18 * std::abs(sum)) break;
  }
  return {sum, std::abs(last)};
}

}  // namespace

bool HeatTraceModel::coefficients_known() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const auto& c) { return c.has_value(); });
}

double HeatTraceModel::remainder(double t) const {
  double r = trace(t);
  for (int i = 0; i <= m; ++i) {
    const auto& a = coefficients[static_cast<std::size_t>(i)];
    if (!a) throw std::invalid_argument(name + ": expansion coefficient a_" + std::to_string(i) + " unknown");
    r -= *a * std::pow(t, -0.5 * (m - i));
  }
  return r;
}

HeatTraceModel HeatTraceModel::from_spectrum(const Spectrum& s, int m) {
  if (m < 0) throw std::invalid_argument("dimension parameter m must be nonnegative");
  HeatTraceModel h;
  h.name = "spectrum";
  h.m = m;
  h.trace = [s](double t) { return s.heat_trace(t, true); };
  h.coefficients.assign(static_cast<std::size_t>(m + 1), 0.0);
  h.coefficients.back() = s.perp_weight();
  h.vanishes = s.perp_weight() == 0.0;
  if (!h.vanishes) h.gap = s.gap();
  h.remainder_radius = h.vanishes ? 1.0 : std::min(1.0, 1.0 / s.largest());
  h.remainder_integral = [s](double t0) {
    quad::Estimate e;
    for (const auto& [l, w] : s.entries()) {
      if (l == 0.0) continue;
      const quad::Estimate ein = ein_series(l * t0);
      e.value -= w * ein.value;
      e.error += w * ein.error;
    }
    return e;
  };
  return h;
}

HeatTraceModel HeatTraceModel::circle(double L, bool include_zero_mode) {
  if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("circumference must be positive");
  HeatTraceModel h;
  h.name = "circle";
  h.m = 1;
  const double zero = include_zero_mode ? 0.0 : 1.0;
  h.trace = [L, zero](double t) {
    if (!(t > 0.0)) throw std::invalid_argument("heat trace needs t > 0");
    const double step = t * (2.0 * kPi / L) * (2.0 * kPi / L);
    double sum = 0.0;
    if (step >= 1.0) {
      // eigenvalue side: 1 + 2 sum_{n >= 1} exp(-t (2 pi n / L)^2)
      for (int n = 1; n < 100000; ++n) {
        const double term = std::exp(-step * n * n);
        sum += term;
        if (term < 1e-18 * (1.0 + sum)) break;
      }
      return 1.0 + 2.0 * sum - zero;
    }
    // Poisson side: L (4 pi t)^-1/2 (1 + 2 sum_{k >= 1} exp(-k^2 L^2 / 4t))
    for (int k = 1; k < 100000; ++k) {
      const double term = std::exp(-static_cast<double>(k) * k * L * L / (4.0 * t));
      sum += term;
      if (term < 1e-18 * (1.0 + sum)) break;
    }
    return L / std::sqrt(4.0 * kPi * t) * (1.0 + 2.0 * sum) - zero;
  };
  h.coefficients = {L / std::sqrt(4.0 * kPi), -zero};
  h.gap = (2.0 * kPi / L) * (2.0 * kPi / L);
  h.remainder_radius = std::min(1.0, L * L / 160.0);
  // int_0^t0 L (4 pi t)^-1/2 2 sum_k exp(-k^2 L^2 / 4t) dt / t = 2 sum_k erfc(k L / (2 sqrt t0)) / k
  h.remainder_integral = [L](double t0) {
    quad::Estimate e;
    for (int k = 1; k < 100000; ++k) {
      const double term = 2.0 * std::erfc(k * L / (2.0 * std::sqrt(t0))) / k;
      e.value += term;
      if (term < 1e-18 * std::max(e.value, 1e-300)) {
        e.error = term;
        break;
      }
    }
    return e;
  };
  return h;
}

HeatTraceModel HeatTraceModel::power_sum(int m, std::vector<std::pair<double, double>> terms) {
  if (m < 0) throw std::invalid_argument("dimension parameter m must be nonnegative");
  HeatTraceModel h;
  h.name = "power-sum";
  h.m = m;
  h.coefficients.assign(static_cast<std::size_t>(m + 1), 0.0);
  std::vector<std::pair<double, double>> positive;
  bool decays = true;
  double constant = 0.0, alpha = std::numeric_limits<double>::infinity();
  for (const auto& [c, e] : terms) {
    if (c == 0.0) continue;
    if (e > 0.0) {
      positive.emplace_back(c, e);
    } else {
      const double idx = m + 2.0 * e;  // e = -(m - i)/2
      if (std::abs(idx - std::round(idx)) > 1e-12 || idx < -1e-12)
        throw std::invalid_argument("power_sum: exponent " + std::to_string(e) + " is not of the form -(m-i)/2");
      *h.coefficients[static_cast<std::size_t>(std::lround(idx))] += c;
    }
    if (e >= 0.0) decays = false;
    constant += std::abs(c);
    alpha = std::min(alpha, -e);
  }
  h.trace = [terms](double t) {
    double s = 0.0;
    for (const auto& [c, e] : terms) s += c * std::pow(t, e);
    return s;
  };
  h.vanishes = constant == 0.0;
  if (!h.vanishes && decays) h.power_law = PowerLawCertificate{constant, alpha};
  h.remainder_radius = 1.0;
  h.remainder_integral = [positive](double t0) {
    quad::Estimate e;
    for (const auto& [c, ex] : positive) e.value += c * std::pow(t0, ex) / ex;
    return e;
  };
  return h;
}

HeatTraceModel HeatTraceModel::from_function(std::string name, int m, std::function<double(double)> f) {
  HeatTraceModel h;
  h.name = std::move(name);
  h.m = m;
  h.trace = std::move(f);
  h.coefficients.assign(static_cast<std::size_t>(m + 1), std::nullopt);
  return h;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi >= lo) || n == 0) throw std::invalid_argument("log_grid: need 0 < lo <= hi, n > 0");
  std::vector<double> g(n);
  for (std::size_t k = 0; k < n; ++k)
    g[k] = n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(k) / static_cast<double>(n - 1));
  return g;
}

AsymptoticFit asympt_fit(const std::function<double(double)>& theta, int m, const std::vector<double>& grid) {
  if (grid.size() < static_cast<std::size_t>(m + 1))
    throw std::invalid_argument("asympt_fit: need at least m + 1 grid points");
  for (double t : grid)
    if (!(t > 0.0 && t <= 0.1)) throw std::invalid_argument("asympt_fit: grid must lie in (0, 0.1]");
  const auto n = static_cast<Eigen::Index>(grid.size());
  linalg::Matrix a(n, m + 1);
  linalg::Vector b(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const double t = grid[static_cast<std::size_t>(r)];
    for (int i = 0; i <= m; ++i) a(r, i) = std::pow(t, 0.5 * i);
    b[r] = std::pow(t, 0.5 * m) * theta(t);
  }
  Eigen::JacobiSVD<linalg::Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const linalg::Vector x = svd.solve(b);
  AsymptoticFit fit;
  fit.coefficients.assign(x.data(), x.data() + x.size());
  const linalg::Vector sv = svd.singularValues();
  fit.condition_number = sv[sv.size() - 1] > 0 ? sv[0] / sv[sv.size() - 1] : std::numeric_limits<double>::infinity();
  fit.residual = std::sqrt((a * x - b).squaredNorm() / static_cast<double>(n));
  fit.ill_conditioned = fit.condition_number > 1e8;
  return fit;
}

AsymptoticFit asympt_fit(const HeatTraceModel& model, const std::vector<double>& grid) {
  return asympt_fit(model.trace, model.m, grid);
}

}  // namespace l2tor::zeta
