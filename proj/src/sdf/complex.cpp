#include "l2tor/sdf/complex.hpp"

#include "l2tor/sdf/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace l2tor::sdf {

namespace {

constexpr double kChainTolerance = 1e-10;

double relative_norm(const Matrix& residual, double scale) {
  if (residual.size() == 0) return 0.0;
  return linalg::singular_values(residual).maxCoeff() / std::max(1.0, scale);
}

}  // namespace

FiniteCochainComplex::FiniteCochainComplex(std::vector<TracedSpace> spaces,
                                           std::vector<TracedMap> differentials, int lowest_degree)
    : spaces_(std::move(spaces)), differentials_(std::move(differentials)), lowest_(lowest_degree) {
  if (spaces_.empty()) throw std::invalid_argument("cochain complex needs at least one space");
  if (differentials_.size() + 1 != spaces_.size())
    throw std::invalid_argument("cochain complex needs one differential between consecutive spaces");
  for (std::size_t k = 0; k < spaces_.size(); ++k)
    if (std::abs(spaces_[k].normalization() - spaces_.front().normalization()) > 1e-15)
      throw std::invalid_argument("all spaces of a complex share one normalization");
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    if (!differentials_[k].source().same_as(spaces_[k]) || !differentials_[k].target().same_as(spaces_[k + 1]))
      throw std::invalid_argument("differential " + std::to_string(k) + " does not match its spaces");
  }
  for (std::size_t k = 0; k + 1 < differentials_.size(); ++k) {
    const Matrix cc = differentials_[k + 1].matrix() * differentials_[k].matrix();
    const TracedMap composite(spaces_[k], spaces_[k + 2], cc);
    const double scale = differentials_[k + 1].norm() * differentials_[k].norm();
    if (composite.norm() > kChainTolerance * std::max(1.0, scale))
      throw std::invalid_argument("differentials do not square to zero in degree " +
                                  std::to_string(lowest_ + static_cast<int>(k)));
  }
}

TracedSpace FiniteCochainComplex::space(int p) const {
  if (p < lowest_ || p > highest_degree()) return TracedSpace(0, normalization());
  return spaces_[static_cast<std::size_t>(p - lowest_)];
}

TracedMap FiniteCochainComplex::differential(int p) const {
  if (p < lowest_ || p >= highest_degree()) return TracedMap::zero(space(p), space(p + 1));
  return differentials_[static_cast<std::size_t>(p - lowest_)];
}

TracedMap FiniteCochainComplex::laplacian(int p) const {
  const TracedMap up = differential(p);
  const TracedMap down = differential(p - 1);
  const Matrix m = up.adjoint().matrix() * up.matrix() + down.matrix() * down.adjoint().matrix();
  return TracedMap(space(p), space(p), m);
}

Matrix FiniteCochainComplex::harmonic_basis(int p) const {
  const TracedSpace s = space(p);
  if (s.dim() == 0) return Matrix(0, 0);
  // whitened: kernel of [c^p ; (c^{p-1})^T] in orthonormal coordinates
  const Matrix up = differential(p).orthonormal_matrix();
  const Matrix down = differential(p - 1).orthonormal_matrix();
  Matrix stacked(up.rows() + down.cols(), s.dim());
  stacked << up, down.transpose();
  if (stacked.rows() == 0) return s.from_orthonormal(Matrix::Identity(s.dim(), s.dim()));
  // rank decisions follow each differential's own spectrum
  const std::size_t r_up = up.rows() ? linalg::numerical_rank(up) : 0;
  const std::size_t r_down = down.cols() ? linalg::numerical_rank(down) : 0;
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const Eigen::Index keep = s.dim() - static_cast<Eigen::Index>(r_up + r_down);
  if (keep <= 0) return Matrix(s.dim(), 0);
  return s.from_orthonormal(svd.matrixV().rightCols(keep));
}

double FiniteCochainComplex::betti(int p) const {
  return normalization() * static_cast<double>(harmonic_basis(p).cols());
}

SpectralDensityFunction complex_sdf(const FiniteCochainComplex& c, int p) {
  const TracedSpace s = c.space(p);
  const TracedMap down = c.differential(p - 1);
  const Matrix image = down.image_basis();
  const Matrix complement = s.orthogonal_complement(image);
  return sdf_of_map(c.differential(p).restricted_to(complement));
}

SpectralDensityFunction complex_sdf_from_ranks(const FiniteCochainComplex& c, int p) {
  const TracedMap up = c.differential(p);
  const TracedMap down = c.differential(p - 1);
  const Vector sv = up.singular_values();
  const double w = c.normalization();
  std::vector<std::pair<double, double>> points;
  const double cut = linalg::zero_threshold(sv);
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cut) points.emplace_back(sv[i], w);
  const auto harmonic = static_cast<double>(c.space(p).dim()) - static_cast<double>(up.rank()) -
                        static_cast<double>(down.rank());
  if (harmonic > 0) points.emplace_back(0.0, w * harmonic);
  return SpectralDensityFunction::counting(points);
}

LaplacianDecomposition laplacian_sdf_decomposition(const FiniteCochainComplex& c, int p, double tolerance) {
  const TracedMap lap = c.laplacian(p);
  const SpectralDensityFunction lap_perp = sdf_of_map(lap).reduced();
  Inequality q;
  q.item = "laplacian";
  q.relation = Relation::Equal;
  q.lhs.add(lap_perp, 1.0, 2.0);
  q.rhs.add(complex_sdf(c, p).reduced());
  q.rhs.add(complex_sdf(c, p - 1).reduced());
  const ProbeResult r = probe(q);

  LaplacianDecomposition out;
  out.probes = r.probes;
  for (const auto& v : r.violations) {
    out.lambdas.push_back(v.lambda);
    out.residuals.push_back(std::abs(v.lhs - v.rhs));
  }
  out.max_residual = std::max(0.0, r.max_excess);
  out.holds = out.max_residual <= tolerance;
  return out;
}

ShortExactTriple::ShortExactTriple(FiniteCochainComplex c, FiniteCochainComplex d, FiniteCochainComplex e,
                                   std::vector<TracedMap> j, std::vector<TracedMap> q)
    : c_(std::move(c)), d_(std::move(d)), e_(std::move(e)), j_(std::move(j)), q_(std::move(q)) {
  const int lo = d_.lowest_degree();
  const auto n = static_cast<std::size_t>(d_.highest_degree() - lo + 1);
  if (c_.lowest_degree() != lo || e_.lowest_degree() != lo || c_.highest_degree() != d_.highest_degree() ||
      e_.highest_degree() != d_.highest_degree())
    throw std::invalid_argument("short exact triple: complexes must share their degree range");
  if (j_.size() != n || q_.size() != n)
    throw std::invalid_argument("short exact triple: one j and one q per degree");
  for (std::size_t k = 0; k < n; ++k) {
    const int p = lo + static_cast<int>(k);
    const std::string where = " in degree " + std::to_string(p);
    if (!j_[k].source().same_as(c_.space(p)) || !j_[k].target().same_as(d_.space(p)) ||
        !q_[k].source().same_as(d_.space(p)) || !q_[k].target().same_as(e_.space(p)))
      throw std::invalid_argument("short exact triple: shape mismatch" + where);
    if (!j_[k].injective()) throw std::invalid_argument("short exact triple: j not injective" + where);
    if (!q_[k].surjective()) throw std::invalid_argument("short exact triple: q not surjective" + where);
    const double qj = relative_norm(q_[k].matrix() * j_[k].matrix(), q_[k].norm() * j_[k].norm());
    if (qj > kChainTolerance || j_[k].rank() + q_[k].rank() != static_cast<std::size_t>(d_.space(p).dim()))
      throw std::invalid_argument("short exact triple: ker q != im j" + where);
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const int p = lo + static_cast<int>(k);
    const Matrix dj = d_.differential(p).matrix() * j_[k].matrix() - j_[k + 1].matrix() * c_.differential(p).matrix();
    const Matrix qd = q_[k + 1].matrix() * d_.differential(p).matrix() - e_.differential(p).matrix() * q_[k].matrix();
    const double scale = d_.differential(p).norm() * std::max(j_[k].norm(), q_[k + 1].norm()) + 1.0;
    if (relative_norm(dj, scale) > kChainTolerance || relative_norm(qd, scale) > kChainTolerance)
      throw std::invalid_argument("short exact triple: maps do not commute with differentials in degree " +
                                  std::to_string(p));
  }
}

TracedMap ShortExactTriple::j(int p) const {
  if (p < d_.lowest_degree() || p > d_.highest_degree()) return TracedMap::zero(c_.space(p), d_.space(p));
  return j_[static_cast<std::size_t>(p - d_.lowest_degree())];
}

TracedMap ShortExactTriple::q(int p) const {
  if (p < d_.lowest_degree() || p > d_.highest_degree()) return TracedMap::zero(d_.space(p), e_.space(p));
  return q_[static_cast<std::size_t>(p - d_.lowest_degree())];
}

TracedMap ShortExactTriple::connecting_map(int p) const {
  const double w = d_.normalization();
  const Matrix he = e_.harmonic_basis(p);
  const Matrix hc = c_.harmonic_basis(p + 1);
  const TracedSpace source(he.cols(), w);
  const TracedSpace target(hc.cols(), w);
  if (he.cols() == 0 || hc.cols() == 0) return TracedMap::zero(source, target);
  // snake: lift through q, apply d_D, pull back through j, take the harmonic part
  const Matrix lift = linalg::pseudo_inverse(q(p).matrix()) * he;
  const Matrix image = d_.differential(p).matrix() * lift;
  const Matrix pulled = linalg::pseudo_inverse(j(p + 1).matrix()) * image;
  const Matrix coefficients = hc.transpose() * c_.space(p + 1).gram() * pulled;
  return TracedMap(source, target, coefficients);
}

}  // namespace l2tor::sdf
