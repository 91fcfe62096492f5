#include "l2tor/hyperbolic/plancherel.hpp"

#include "l2tor/quadrature.hpp"
#include "l2tor/zeta/torsion.hpp"

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace l2tor::hyperbolic {

namespace {

constexpr double kPi = 3.14159265358979323846;
// e^{-s^2} r^k is below 1e-60 of its peak past s = 12
constexpr double kGaussianCut = 12.0;

// one term A t^{b} e^{-t sigma} of a degree's Gaussian moment expansion
struct MomentTerm {
  double amplitude;
  double exponent;
  double sigma;
};

std::vector<MomentTerm> moment_terms(const PlancherelRow& row) {
  std::vector<MomentTerm> out;
  for (const auto& c : row.components) {
    for (std::size_t k = 0; k < c.mu.size(); ++k) {
      if (c.mu[k] == 0.0) continue;
      const double half = 0.5 * static_cast<double>(k + 1);
      out.push_back({c.mu[k] * std::tgamma(half) / 2.0, -half, c.sigma});
    }
  }
  return out;
}

double component_integral(const PlancherelComponent& c, double t, int panels) {
  const double scale = 1.0 / std::sqrt(t);
  auto f = [&c, scale](double s) { return std::exp(-s * s) * c.density(s * scale); };
  double sum = 0.0;
  const double width = kGaussianCut / panels;
  for (int i = 0; i < panels; ++i) sum += quad::integrate(f, i * width, (i + 1) * width, 1e-13, 0.0).value;
  return std::exp(-t * c.sigma) * scale * sum;
}

TableValidation validate(const PlancherelTable& table) {
  TableValidation v;
  const int m = table.m();
  for (double t : zeta::log_grid(1e-4, 10.0, 13)) {
    std::vector<double> k(static_cast<std::size_t>(m + 1));
    for (int p = 0; p <= m; ++p) k[static_cast<std::size_t>(p)] = heat_density(table, p, t);
    double alternating = 0.0, total = 0.0;
    for (int p = 0; p <= m; ++p) {
      const double kp = k[static_cast<std::size_t>(p)], kd = k[static_cast<std::size_t>(m - p)];
      v.duality_residual = std::max(v.duality_residual, std::abs(kp - kd) / std::max(std::abs(kp), 1e-300));
      alternating += (p % 2 ? -1.0 : 1.0) * kp;
      total += std::abs(kp);
    }
    v.euler_residual = std::max(v.euler_residual, std::abs(alternating) / total);
  }
  const double t = 1e-4;
  for (int p = 0; p <= m; ++p) {
    const double leading = boost::math::binomial_coefficient<double>(static_cast<unsigned>(m), static_cast<unsigned>(p)) /
                           std::pow(4.0 * kPi * t, 0.5 * m);
    v.leading_residual = std::max(v.leading_residual, std::abs(heat_density(table, p, t) / leading - 1.0));
  }
  v.ok = v.duality_residual <= 1e-10 && v.leading_residual <= 1e-3 && v.euler_residual <= 1e-9;
  return v;
}

}  // namespace

double PlancherelComponent::density(double r) const {
  double v = 0.0;
  for (auto it = mu.rbegin(); it != mu.rend(); ++it) v = v * r + *it;
  return v;
}

PlancherelTable PlancherelTable::from_json(const nlohmann::json& j) {
  PlancherelTable table;
  try {
    table.m_ = j.at("m").get<int>();
    if (table.m_ < 1 || table.m_ % 2 == 0)
      throw std::invalid_argument("Plancherel table: m must be odd, got " + std::to_string(table.m_));
    table.rows_.resize(static_cast<std::size_t>(table.m_ + 1));
    std::vector<bool> seen(table.rows_.size(), false);
    for (const auto& d : j.at("degrees")) {
      const int p = d.at("p").get<int>();
      if (p < 0 || p > table.m_) throw std::invalid_argument("Plancherel table: degree " + std::to_string(p) + " out of range");
      if (seen[static_cast<std::size_t>(p)]) throw std::invalid_argument("Plancherel table: degree " + std::to_string(p) + " repeated");
      seen[static_cast<std::size_t>(p)] = true;
      PlancherelRow& row = table.rows_[static_cast<std::size_t>(p)];
      row.p = p;
      for (const auto& c : d.at("components")) {
        PlancherelComponent comp;
        comp.name = c.value("name", "");
        comp.sigma = c.at("sigma").get<double>();
        comp.mu = c.at("mu").get<std::vector<double>>();
        comp.provenance = c.value("provenance", "");
        if (!(comp.sigma >= 0.0) || !std::isfinite(comp.sigma))
          throw std::invalid_argument("Plancherel table: degree " + std::to_string(p) + " has a negative spectral shift");
        if (comp.mu.empty() || !std::all_of(comp.mu.begin(), comp.mu.end(), [](double x) { return std::isfinite(x) && x >= 0.0; }))
          throw std::invalid_argument("Plancherel table: degree " + std::to_string(p) + " density coefficients must be finite and nonnegative");
        row.components.push_back(std::move(comp));
      }
      if (row.components.empty()) throw std::invalid_argument("Plancherel table: degree " + std::to_string(p) + " has no components");
    }
    for (std::size_t p = 0; p < seen.size(); ++p)
      if (!seen[p]) throw std::invalid_argument("Plancherel table: row for degree " + std::to_string(p) + " missing");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("Plancherel table: ") + e.what());
  }
  table.validation_ = validate(table);
  if (!table.validation_.ok)
    throw std::invalid_argument("Plancherel table rejected: duality " + std::to_string(table.validation_.duality_residual) +
                                ", leading term " + std::to_string(table.validation_.leading_residual) + ", Euler density " +
                                std::to_string(table.validation_.euler_residual));
  return table;
}

PlancherelTable PlancherelTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Plancherel table " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return from_json(j);
}

PlancherelTable PlancherelTable::shipped_h3() {
  static const PlancherelTable table = load(std::string(L2TOR_DATA_DIR) + "/plancherel_h3.json");
  return table;
}

const PlancherelRow& PlancherelTable::row(int p) const {
  if (p < 0 || p > m_) throw std::out_of_range("Plancherel table has no row for degree " + std::to_string(p));
  return rows_[static_cast<std::size_t>(p)];
}

double heat_density(const PlancherelTable& table, int p, double t, int panels) {
  if (!(t > 0.0)) throw std::invalid_argument("heat density needs t > 0");
  if (panels < 1) throw std::invalid_argument("heat density needs at least one panel");
  double sum = 0.0;
  for (const auto& c : table.row(p).components) sum += component_integral(c, t, panels);
  return sum;
}

double heat_density_closed_form(const PlancherelTable& table, int p, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("heat density needs t > 0");
  double sum = 0.0;
  for (const auto& term : moment_terms(table.row(p))) sum += term.amplitude * std::pow(t, term.exponent) * std::exp(-t * term.sigma);
  return sum;
}

zeta::HeatTraceModel heat_model(const PlancherelTable& table, int p, int panels) {
  const int m = table.m();
  const std::vector<MomentTerm> terms = moment_terms(table.row(p));
  zeta::HeatTraceModel h;
  h.name = "H^" + std::to_string(m) + " degree " + std::to_string(p);
  h.m = m;
  h.trace = [table, p, panels](double t) { return heat_density(table, p, t, panels); };
  h.coefficients.assign(static_cast<std::size_t>(m + 1), 0.0);

  // A t^b e^{-t sigma} = sum_j A (-sigma)^j / j! t^{b+j}; nonpositive powers go to the coefficients
  for (const auto& term : terms) {
    double c = term.amplitude;
    for (int j = 0; term.exponent + j <= 0.0; ++j) {
      if (j > 0) c *= -term.sigma / j;
      const double idx = m + 2.0 * (term.exponent + j);
      if (idx < -1e-12) throw std::invalid_argument(h.name + ": heat density more singular than t^{-m/2}");
      *h.coefficients[static_cast<std::size_t>(std::lround(idx))] += c;
    }
  }
  h.remainder_radius = 1.0;
  h.remainder_integral = [terms](double t0) {
    quad::Estimate e;
    for (const auto& term : terms) {
      double c = term.amplitude;
      for (int j = 0; j < 400; ++j) {
        if (j > 0) c *= -term.sigma / j;
        const double e_j = term.exponent + j;
        if (e_j <= 0.0) continue;
        const double piece = c * std::pow(t0, e_j) / e_j;
        e.value += piece;
        if (c == 0.0 || (j > term.sigma * t0 && std::abs(piece) < 1e-18 * std::max(std::abs(e.value), 1e-300))) {
          e.error += std::abs(piece);
          break;
        }
      }
    }
    return e;
  };

  double min_sigma = std::numeric_limits<double>::infinity();
  double constant = 0.0, alpha = std::numeric_limits<double>::infinity();
  for (const auto& term : terms) {
    min_sigma = std::min(min_sigma, term.sigma);
    // e^{-t sigma} t^b <= e^{-sigma} t^{-alpha} for t >= 1
    constant += std::abs(term.amplitude) * std::exp(-term.sigma);
    alpha = std::min(alpha, -term.exponent);
  }
  h.vanishes = terms.empty();
  if (min_sigma > 0.0 && std::isfinite(min_sigma)) h.gap = min_sigma;
  if (!terms.empty()) h.power_law = zeta::PowerLawCertificate{constant, alpha};
  return h;
}

double torsion_constant(const PlancherelTable& table, int panels) {
  std::vector<std::pair<int, zeta::HeatTraceModel>> degrees;
  for (int p = 0; p <= table.m(); ++p) degrees.emplace_back(p, heat_model(table, p, panels));
  return zeta::analytic_torsion(degrees).total;
}

double torsion_constant(int m) {
  if (m < 1) throw std::invalid_argument("torsion constant needs m >= 1");
  if (m % 2 == 0) return 0.0;
  if (m == 3) return torsion_constant(PlancherelTable::shipped_h3());
  throw std::invalid_argument("torsion constant: no Plancherel table shipped for m = " + std::to_string(m));
}

}  // namespace l2tor::hyperbolic
