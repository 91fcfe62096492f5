#include "l2tor/sdf/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace l2tor::sdf {

SpectralDensityFunction SpectralDensityFunction::from_breakpoints(std::vector<Breakpoint> bps) {
  for (std::size_t i = 0; i < bps.size(); ++i) {
    if (!std::isfinite(bps[i].lambda) || !std::isfinite(bps[i].value) || bps[i].lambda < 0.0 ||
        bps[i].value < 0.0)
      throw std::invalid_argument("breakpoints must be finite and nonnegative");
    if (i > 0 && !(bps[i].lambda > bps[i - 1].lambda))
      throw std::invalid_argument("breakpoint positions must be strictly increasing");
    if (i > 0 && bps[i].value < bps[i - 1].value)
      throw std::invalid_argument("spectral density function must be nondecreasing");
  }
  SpectralDensityFunction f;
  f.breakpoints_ = std::move(bps);
  return f;
}

SpectralDensityFunction SpectralDensityFunction::counting(
    const std::vector<std::pair<double, double>>& points) {
  std::vector<std::pair<double, double>> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Breakpoint> bps;
  double running = 0.0;
  for (const auto& [position, weight] : sorted) {
    if (!(position >= 0.0) || !std::isfinite(position) || !(weight >= 0.0) || !std::isfinite(weight))
      throw std::invalid_argument("counting function needs finite nonnegative positions and weights");
    running += weight;
    if (!bps.empty() && bps.back().lambda == position)
      bps.back().value = running;
    else
      bps.push_back({position, running});
  }
  SpectralDensityFunction f;
  f.breakpoints_ = std::move(bps);
  return f;
}

SpectralDensityFunction SpectralDensityFunction::from_singular_values(const Vector& sv, double weight) {
  if (!sv.allFinite()) throw std::invalid_argument("non-finite singular values");
  const double cut = linalg::zero_threshold(sv);
  std::vector<std::pair<double, double>> points;
  points.reserve(static_cast<std::size_t>(sv.size()));
  for (Eigen::Index i = 0; i < sv.size(); ++i) points.emplace_back(sv[i] > cut ? sv[i] : 0.0, weight);
  return counting(points);
}

double SpectralDensityFunction::operator()(double lambda) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), lambda,
                             [](double l, const Breakpoint& b) { return l < b.lambda; });
  if (it == breakpoints_.begin()) return 0.0;
  return std::prev(it)->value;
}

SpectralDensityFunction SpectralDensityFunction::reduced() const {
  const double base = at_zero();
  std::vector<Breakpoint> bps;
  for (const auto& b : breakpoints_)
    if (b.lambda > 0.0) bps.push_back({b.lambda, b.value - base});
  SpectralDensityFunction f;
  f.breakpoints_ = std::move(bps);
  return f;
}

SpectralDensityFunction sdf_of_map(const TracedMap& f) {
  return SpectralDensityFunction::from_singular_values(f.singular_values(), f.source().normalization());
}

SpectralDensityFunction reduced_sdf(const TracedMap& f) { return sdf_of_map(f).reduced(); }

double variational_sdf(const TracedMap& f, double lambda) {
  const Matrix a = f.orthonormal_matrix();
  const Eigen::Index n = a.cols();
  if (!f.source().gram().isIdentity(1e-12) || !f.target().gram().isIdentity(1e-12))
    throw std::invalid_argument("variational_sdf needs orthonormal coordinate frames");
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      if (r != c && a(r, c) != 0.0) throw std::invalid_argument("variational_sdf needs a diagonal map");
  if (n > 20) throw std::invalid_argument("variational_sdf enumerates subsets; dimension too large");

  const Vector sv = linalg::singular_values(a);
  const double cut = linalg::zero_threshold(sv);
  std::vector<Eigen::Index> coimage;
  for (Eigen::Index c = 0; c < n; ++c)
    if (c < a.rows() && std::abs(a(c, c)) > cut) coimage.push_back(c);

  // sup over coordinate subspaces of ker(f)^perp, each tested through its restricted operator norm
  std::size_t best = 0;
  const std::size_t k = coimage.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    Matrix restricted(a.rows(), 0);
    for (std::size_t b = 0; b < k; ++b) {
      if (!(mask & (std::size_t{1} << b))) continue;
      restricted.conservativeResize(Eigen::NoChange, restricted.cols() + 1);
      restricted.col(restricted.cols() - 1) = a.col(coimage[b]);
    }
    const double norm = linalg::singular_values(restricted).maxCoeff();
    if (norm <= lambda) best = std::max<std::size_t>(best, static_cast<std::size_t>(restricted.cols()));
  }
  return f.source().normalization() * static_cast<double>(best);
}

ExponentFit ns_exponent_fit(const SpectralDensityFunction& f, double eps) {
  ExponentFit fit;
  if (!(eps > 0.0)) throw std::invalid_argument("ns_exponent_fit: eps must be positive");
  const SpectralDensityFunction bar = f.reduced();
  std::vector<std::pair<double, double>> pts;
  for (const auto& b : bar.breakpoints())
    if (b.lambda > 0.0 && b.lambda <= eps && b.value > 0.0) pts.emplace_back(std::log(b.lambda), std::log(b.value));
  fit.points = pts.size();
  if (pts.empty()) {
    fit.status = ExponentFit::Status::SpectralGap;
    fit.alpha = std::numeric_limits<double>::infinity();
    fit.certifies_power_law = true;
    fit.note = "no spectrum in (0, eps]: spectral gap";
    return fit;
  }
  if (pts.size() < 3) {
    fit.status = ExponentFit::Status::InsufficientData;
    fit.note = "insufficient data";
    return fit;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(pts.size());
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  fit.status = ExponentFit::Status::Fitted;
  fit.alpha = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - fit.alpha * sx) / n;
  double ss = 0.0;
  double log_c = -std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : pts) {
    const double r = y - (intercept + fit.alpha * x);
    ss += r * r;
    log_c = std::max(log_c, y - fit.alpha * x);
  }
  fit.residual = std::sqrt(ss / n);
  fit.constant = std::exp(log_c);
  // A vanishing exponent means Fbar does not decay at 0: no determinant-class certificate.
  constexpr double kMinCertifyingExponent = 1e-2;
  fit.certifies_power_law = fit.alpha > kMinCertifyingExponent;
  if (!fit.certifies_power_law) fit.note = "exponent ~ 0: not determinant-class certifying";
  return fit;
}

}  // namespace l2tor::sdf
