#include "l2tor/heat/kernel1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace l2tor::heat {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

double image_reach(double t, double span) { return 12.0 * std::sqrt(t) + span; }

// sum_n G(d + n P) over images within reach of d
double periodic_sum(double t, double d, double period, double span) {
  const long n_max = static_cast<long>(std::ceil((image_reach(t, span) + std::abs(d)) / period)) + 1;
  double s = 0.0;
  for (long n = -n_max; n <= n_max; ++n) s += gaussian(t, d + n * period);
  return s;
}

void require_inside(const Domain1D& D, double x) {
  if (!D.contains(x)) throw std::invalid_argument("point " + std::to_string(x) + " outside " + D.name());
}

double log_gaussian(double t, double d) { return -d * d / (4.0 * t) - 0.5 * std::log(4.0 * kPi * t); }

// log |K_V - K_N| from the image terms the two kernels do not share; all of them carry the
// same sign, so a log-sum-exp avoids the underflow of the differences themselves
double log_kernel_difference(const Domain1D& V, const Domain1D& N, double t, double x, double y) {
  if (V.kind == N.kind && V.length == N.length) return -kInf;
  if (N.kind == DomainKind::Line && (V.kind == DomainKind::HalfLineNeumann || V.kind == DomainKind::HalfLineDirichlet))
    return log_gaussian(t, x + y);
  if (N.kind == DomainKind::HalfLineNeumann && V.kind == DomainKind::IntervalNeumann) {
    const double P = 2.0 * V.length;
    const long n_max = static_cast<long>(std::ceil(image_reach(t, V.length) / P)) + 1;
    std::vector<double> logs;
    for (long n = -n_max; n <= n_max; ++n)
      if (n != 0) {
        logs.push_back(log_gaussian(t, x - y + n * P));
        logs.push_back(log_gaussian(t, x + y + n * P));
      }
    const double top = *std::max_element(logs.begin(), logs.end());
    double s = 0.0;
    for (double l : logs) s += std::exp(l - top);
    return top + std::log(s);
  }
  throw std::invalid_argument(V.name() + " is not a supported subdomain of " + N.name());
}

std::vector<double> refine(const std::vector<double>& g, bool geometric) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    for (int k = 0; k < 4; ++k) {
      const double s = k / 4.0;
      out.push_back(geometric ? g[i] * std::pow(g[i + 1] / g[i], s) : g[i] + s * (g[i + 1] - g[i]));
    }
  out.push_back(g.back());
  return out;
}

}  // namespace

Domain1D Domain1D::interval_neumann(double L) {
  if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("interval length must be positive");
  return {DomainKind::IntervalNeumann, L};
}

Domain1D Domain1D::circle(double L) {
  if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("circle length must be positive");
  return {DomainKind::Circle, L};
}

bool Domain1D::contains(double x) const {
  if (!std::isfinite(x)) return false;
  switch (kind) {
    case DomainKind::Line:
      return true;
    case DomainKind::HalfLineNeumann:
    case DomainKind::HalfLineDirichlet:
      return x >= 0.0;
    case DomainKind::IntervalNeumann:
      return x >= 0.0 && x <= length;
    case DomainKind::Circle:
      return x >= 0.0 && x < length;
  }
  return false;
}

double Domain1D::lower() const { return kind == DomainKind::Line ? -std::numeric_limits<double>::infinity() : 0.0; }

double Domain1D::upper() const {
  return kind == DomainKind::IntervalNeumann || kind == DomainKind::Circle ? length : std::numeric_limits<double>::infinity();
}

std::string Domain1D::name() const {
  switch (kind) {
    case DomainKind::Line:
      return "line";
    case DomainKind::HalfLineNeumann:
      return "half-line (Neumann)";
    case DomainKind::HalfLineDirichlet:
      return "half-line (Dirichlet)";
    case DomainKind::IntervalNeumann:
      return "interval [0, " + std::to_string(length) + "] (Neumann)";
    case DomainKind::Circle:
      return "circle of length " + std::to_string(length);
  }
  return "unknown";
}

double gaussian(double t, double d) { return std::exp(-d * d / (4.0 * t)) / std::sqrt(4.0 * kPi * t); }

double kernel_1d(const Domain1D& D, double t, double x, double y) {
  if (!(t > 0.0)) throw std::invalid_argument("heat kernel needs t > 0");
  require_inside(D, x);
  require_inside(D, y);
  switch (D.kind) {
    case DomainKind::Line:
      return gaussian(t, x - y);
    case DomainKind::HalfLineNeumann:
      return gaussian(t, x - y) + gaussian(t, x + y);
    case DomainKind::HalfLineDirichlet:
      return gaussian(t, x - y) - gaussian(t, x + y);
    case DomainKind::IntervalNeumann:
      return periodic_sum(t, x - y, 2.0 * D.length, D.length) + periodic_sum(t, x + y, 2.0 * D.length, D.length);
    case DomainKind::Circle:
      return periodic_sum(t, x - y, D.length, D.length);
  }
  return 0.0;
}

std::vector<double> HeatGrid::t_grid() const {
  std::vector<double> g(t_points);
  for (std::size_t i = 0; i < t_points; ++i)
    g[i] = t_points == 1 ? t_min : t_min * std::pow(t_max / t_min, static_cast<double>(i) / (t_points - 1));
  return g;
}

std::vector<double> HeatGrid::x_grid(const Domain1D& D) const {
  double lo = D.lower(), hi = D.upper();
  if (!std::isfinite(lo)) lo = -x_max;
  if (!std::isfinite(hi)) hi = x_max;
  // the circle's range is half open
  if (D.kind == DomainKind::Circle) hi = D.length * (1.0 - 1.0 / x_points);
  std::vector<double> g(x_points);
  for (std::size_t i = 0; i < x_points; ++i) g[i] = lo + (hi - lo) * static_cast<double>(i) / (x_points - 1);
  return g;
}

double distance_to_complement(const Domain1D& V, const Domain1D& N, double x) {
  require_inside(V, x);
  if (V.kind == N.kind && V.length == N.length) return std::numeric_limits<double>::infinity();
  if (N.kind == DomainKind::Line && (V.kind == DomainKind::HalfLineNeumann || V.kind == DomainKind::HalfLineDirichlet))
    return x;
  if (N.kind == DomainKind::HalfLineNeumann && V.kind == DomainKind::IntervalNeumann) return V.length - x;
  throw std::invalid_argument(V.name() + " is not a supported subdomain of " + N.name());
}

InsensitivityReport boundary_insensitivity_check(const Domain1D& V, const Domain1D& N, double K, const HeatGrid& grid) {
  InsensitivityReport r;
  r.pair = V.name() + " in " + N.name();
  r.K = K;
  const std::vector<double> ts = grid.t_grid();
  std::vector<double> xs;
  for (double x : grid.x_grid(V))
    if (distance_to_complement(V, N, x) >= K) xs.push_back(x);
  if (xs.empty()) throw std::invalid_argument("no grid point lies at distance >= K from the complement");

  const bool half_line_pair = N.kind == DomainKind::Line && V.kind == DomainKind::HalfLineNeumann;
  for (double t : ts)
    for (double x : xs) {
      ++r.points;
      if (!half_line_pair) continue;
      const double brute = kernel_1d(V, t, x, x) - kernel_1d(N, t, x, x);
      const double predicted = std::exp(-x * x / t) / std::sqrt(4.0 * kPi * t);
      const double residual = std::abs(brute - predicted) * std::sqrt(4.0 * kPi * t);
      r.identity_residual = std::max(r.identity_residual, residual);
      if (residual > 1e-12) ++r.identity_violations;
    }

  const std::vector<double> ts_fine = refine(ts, true);
  std::vector<double> xs_fine;
  for (double x : refine(xs, false))
    if (distance_to_complement(V, N, x) >= K) xs_fine.push_back(x);

  for (double c2 : {1.0, 2.0, 4.0}) {
    // log of |diff| exp(d^2 / (C2 t)); no finite constant if d is infinite and diff is not zero
    auto log_scaled = [&](double t, double x) {
      const double d = distance_to_complement(V, N, x);
      const double l = log_kernel_difference(V, N, t, x, x);
      if (l == -kInf) return -kInf;
      return std::isfinite(d) ? l + d * d / (c2 * t) : kInf;
    };
    double log_c1 = -kInf;
    for (double t : ts)
      for (double x : xs) log_c1 = std::max(log_c1, log_scaled(t, x));
    ConstantFit fit{c2, std::exp(log_c1), 0};
    for (double t : ts_fine)
      for (double x : xs_fine)
        if (log_scaled(t, x) > log_c1 + 1e-12 * (1.0 + std::abs(log_c1))) ++fit.refined_violations;
    r.fits.push_back(fit);
  }
  for (const auto& f : r.fits)
    if (f.refined_violations == 0 && std::isfinite(f.c1)) {
      r.fitted_c1 = f.c1;
      r.fitted_c2 = f.c2;
      break;
    }
  return r;
}

std::vector<double> c1_profile(const Domain1D& V, const Domain1D& N, const std::vector<double>& Ks, double c2,
                               const HeatGrid& grid) {
  std::vector<double> out;
  for (double K : Ks) {
    const InsensitivityReport r = boundary_insensitivity_check(V, N, K, grid);
    const auto it = std::find_if(r.fits.begin(), r.fits.end(), [c2](const ConstantFit& f) { return f.c2 == c2; });
    if (it == r.fits.end()) throw std::invalid_argument("C2 must be one of 1, 2, 4");
    out.push_back(it->c1);
  }
  return out;
}

SupBound sup_bound_check(const Domain1D& D, double t0, const HeatGrid& grid) {
  if (!(t0 > 0.0)) throw std::invalid_argument("sup bound needs t0 > 0");
  SupBound b;
  const std::vector<double> xs = grid.x_grid(D);
  for (double x : xs) b.diagonal = std::max(b.diagonal, kernel_1d(D, t0, x, x));
  HeatGrid tg = grid;
  tg.t_min = t0;
  tg.t_max = 100.0 * t0;
  for (double t : tg.t_grid())
    for (double x : xs)
      for (double y : xs) b.sup = std::max(b.sup, kernel_1d(D, t, x, y));
  b.attained_at_t0 = b.sup <= b.diagonal * (1.0 + 1e-12);
  return b;
}

}  // namespace l2tor::heat
