#include "l2tor/anomaly/conformal.hpp"

#include <cmath>
#include <stdexcept>

namespace l2tor::anomaly {

namespace {

constexpr double kPi = 3.14159265358979323846;

const std::vector<std::vector<std::string>>& basis(int dim) {
  static const std::vector<std::vector<std::string>> b2 = {{"1"}, {"dx", "dy"}, {"dx^dy"}};
  static const std::vector<std::vector<std::string>> b3 = {
      {"1"}, {"dx", "dy", "dz"}, {"dx^dy", "dx^dz", "dy^dz"}, {"dx^dy^dz"}};
  return dim == 2 ? b2 : b3;
}

// Euclidean star: image and sign of each basis form
std::vector<std::pair<std::string, double>> euclidean_star(int dim, int p) {
  if (dim == 2) {
    static const std::vector<std::vector<std::pair<std::string, double>>> t = {
        {{"dx^dy", 1.0}}, {{"dy", 1.0}, {"dx", -1.0}}, {{"1", 1.0}}};
    return t[static_cast<std::size_t>(p)];
  }
  static const std::vector<std::vector<std::pair<std::string, double>>> t = {
      {{"dx^dy^dz", 1.0}},
      {{"dy^dz", 1.0}, {"dx^dz", -1.0}, {"dx^dy", 1.0}},
      {{"dz", 1.0}, {"dy", -1.0}, {"dx", 1.0}},
      {{"1", 1.0}}};
  return t[static_cast<std::size_t>(p)];
}

void require_degree(const ConformalFamily& F, int p) {
  if (p < 0 || p > F.dim()) throw std::out_of_range("form degree " + std::to_string(p) + " out of range for dimension " + std::to_string(F.dim()));
}

}  // namespace

ConformalFamily::ConformalFamily(int dim, Expression f) : dim_(dim), f_(std::move(f)) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("conformal families are implemented in dimensions 2 and 3");
}

ConformalFamily ConformalFamily::from_text(int dim, const std::string& text) {
  if (text == "preset:paper") return ConformalFamily(dim, Expression::parse(dim == 2 ? "1+u*x" : "1+x+u*x"));
  return ConformalFamily(dim, Expression::parse(text));
}

Jet ConformalFamily::conformal_factor(double x, double u) const {
  const Jet f = f_.evaluate(x, u);
  if (!(f.value() > 0.0))
    throw std::domain_error("conformal factor f(" + std::to_string(x) + ", " + std::to_string(u) + ") = " +
                            std::to_string(f.value()) + " is not positive");
  return dim_ == 2 ? f : f * f;
}

std::vector<StarEntry> hodge_star_conformal(const ConformalFamily& F, int p, double x, double u) {
  require_degree(F, p);
  const Jet h = F.conformal_factor(x, u);
  const Jet coefficient = pow(h, 0.5 * (F.dim() - 2 * p));
  std::vector<StarEntry> out;
  const auto& forms = basis(F.dim())[static_cast<std::size_t>(p)];
  const auto images = euclidean_star(F.dim(), p);
  for (std::size_t i = 0; i < forms.size(); ++i) out.push_back({forms[i], images[i].first, images[i].second, coefficient});
  return out;
}

Jet v_closed_form(const ConformalFamily& F, int p, double x, double u) {
  require_degree(F, p);
  const Jet f = F.f().evaluate(x, u);
  // h'/h is f'/f in dim 2 and 2 f'/f in dim 3
  const double weight = F.dim() == 2 ? p - 1.0 : 2.0 * p - 3.0;
  return Jet::constant(weight) * f.du() / f;
}

Jet v_from_star(const ConformalFamily& F, int p, double x, double u) {
  require_degree(F, p);
  // *^{-1} on degree p comes from the star on degree m - p; all its basis coefficients agree
  const Jet s = hodge_star_conformal(F, F.dim() - p, x, u).front().coefficient;
  return s.du() / s;
}

double v_operator(const ConformalFamily& F, int p, double x, double u) {
  const Jet a = v_closed_form(F, p, x, u), b = v_from_star(F, p, x, u);
  for (int k = 0; k <= Jet::kX; ++k)
    if (std::abs(a.derivative(k, 0) - b.derivative(k, 0)) > 1e-10 * (1.0 + std::abs(a.derivative(k, 0))))
      throw std::logic_error("V_" + std::to_string(p) + ": closed form and differentiated star disagree");
  return a.value();
}

double mean_curvature(const ConformalFamily& F, double u) {
  if (F.dim() != 3) throw std::invalid_argument("mean curvature is only used in dimension 3");
  return F.conformal_factor(0.0, u).derivative(1, 0);
}

AnomalyCoefficients anomaly_coefficients(const ConformalFamily& F, double u, double boundary_volume) {
  const Jet f0 = F.f().evaluate(0.0, u);
  const double fu = f0.derivative(0, 1);
  if (std::abs(fu) > 1e-12 * (1.0 + std::abs(f0.value())))
    throw std::invalid_argument("d_u f(0, u) = " + std::to_string(fu) +
                                " is not zero: the reduced boundary formula needs V_p = 0 on the boundary");
  const int m = F.dim();
  AnomalyCoefficients a;
  a.dim = m;
  a.u = u;
  std::vector<double> dv(static_cast<std::size_t>(m + 1)), ddv(dv.size());
  for (int p = 0; p <= m; ++p) {
    v_operator(F, p, 0.0, u);  // cross-check of the two routes
    const Jet v = v_closed_form(F, p, 0.0, u);
    dv[static_cast<std::size_t>(p)] = v.derivative(1, 0);
    ddv[static_cast<std::size_t>(p)] = v.derivative(2, 0);
  }

  if (m == 2) {
    // one Neumann and one Dirichlet component in degree 1
    a.psi = {1.0, 0.0, -1.0};
    for (int p = 0; p <= 2; ++p)
      a.d.push_back(boundary_volume * a.psi[static_cast<std::size_t>(p)] * dv[static_cast<std::size_t>(p)] / (8.0 * kPi));
  } else {
    a.psi_n = {1.0, 2.0, 1.0, 0.0};
    a.psi_d = {0.0, 1.0, 2.0, 1.0};
    for (int p = 0; p <= 3; ++p) a.psi.push_back(a.psi_n[static_cast<std::size_t>(p)] - a.psi_d[static_cast<std::size_t>(p)]);
    const double k = mean_curvature(F, u);
    a.mean_curvature = k;
    const std::vector<double> S = {0.0, -k, -k, 0.0};
    for (int p = 0; p <= 3; ++p) {
      const auto i = static_cast<std::size_t>(p);
      const double sign = p % 2 ? -1.0 : 1.0;
      const double second = 4.0 * a.psi[i] * ddv[i];
      const double curvature = dv[i] * (a.psi_n[i] + 5.0 * a.psi_d[i]) * k;
      const double shape = dv[i] * 16.0 * S[i];
      a.d.push_back(boundary_volume * (second + curvature + shape) / (256.0 * kPi));
      a.second_derivative_sum += sign * boundary_volume * second / (256.0 * kPi);
      a.curvature_term_sum += sign * boundary_volume * curvature / (256.0 * kPi);
    }
  }
  for (double& d : a.d) d += 0.0;  // no negative zeros in reports
  for (std::size_t p = 0; p < a.d.size(); ++p) a.alternating_sum += (p % 2 ? -1.0 : 1.0) * a.d[p];
  return a;
}

double product_lift(double base_sum) { return 2.0 * base_sum; }

}  // namespace l2tor::anomaly
