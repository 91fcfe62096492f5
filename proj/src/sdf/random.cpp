#include "l2tor/sdf/random.hpp"

#include <algorithm>
#include <cmath>

namespace l2tor::sdf {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix random_normal(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = n(rng);
  return m;
}

Matrix random_orthogonal(Rng& rng, Eigen::Index n) {
  if (n == 0) return Matrix(0, 0);
  const Matrix a = random_normal(rng, n, n);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k)
    if (r(k, k) < 0) q.col(k) *= -1.0;
  return q;
}

int random_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double random_uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

TracedSpace random_space(Rng& rng, Eigen::Index dim, double normalization) {
  const Matrix a = random_normal(rng, dim, dim);
  return TracedSpace(a.transpose() * a + Matrix::Identity(dim, dim), normalization);
}

Eigen::Index random_rank(Rng& rng, Eigen::Index max_rank) {
  if (max_rank <= 0) return 0;
  if (random_int(rng, 0, 1) == 0) return max_rank;
  return random_int(rng, 0, static_cast<int>(max_rank));
}

namespace {

// square block with singular values log-uniform in [1/10, 10]
Matrix conditioned(Rng& rng, Eigen::Index n) {
  Vector sv(n);
  for (Eigen::Index k = 0; k < n; ++k) sv[k] = std::exp(random_uniform(rng, std::log(0.1), std::log(10.0)));
  return random_orthogonal(rng, n) * sv.asDiagonal() * random_orthogonal(rng, n).transpose();
}

// coefficient matrix of the map whose orthonormal-frame matrix is `whitened`
Matrix dewhiten(const TracedSpace& source, const TracedSpace& target, const Matrix& whitened) {
  const Matrix lt = source.to_orthonormal(Matrix::Identity(source.dim(), source.dim()));
  return target.from_orthonormal(whitened * lt);
}

}  // namespace

TracedMap random_map(Rng& rng, const TracedSpace& source, const TracedSpace& target, Eigen::Index rank) {
  rank = std::min({rank, source.dim(), target.dim()});
  const Matrix whitened = random_orthogonal(rng, target.dim()).leftCols(rank) * conditioned(rng, rank) *
                          random_orthogonal(rng, source.dim()).leftCols(rank).transpose();
  return TracedMap(source, target, dewhiten(source, target, whitened));
}

FiniteCochainComplex random_complex_with_ranks(Rng& rng, const std::vector<Eigen::Index>& dims,
                                               const std::vector<Eigen::Index>& ranks, double normalization) {
  const std::size_t n = dims.size();
  std::vector<TracedSpace> spaces;
  std::vector<Matrix> frames;
  for (std::size_t p = 0; p < n; ++p) {
    spaces.push_back(random_space(rng, dims[p], normalization));
    frames.push_back(random_orthogonal(rng, dims[p]));
  }
  std::vector<TracedMap> diffs;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    const Eigen::Index before = p > 0 ? ranks[p - 1] : 0;
    const Eigen::Index r = ranks[p];
    // image of c^{p-1} occupies the first columns of the frame, then the coimage of c^p
    const Matrix coimage = frames[p].middleCols(before, r);
    const Matrix image = frames[p + 1].leftCols(r);
    const Matrix whitened = image * conditioned(rng, r) * coimage.transpose();
    diffs.emplace_back(spaces[p], spaces[p + 1], dewhiten(spaces[p], spaces[p + 1], whitened));
  }
  return FiniteCochainComplex(std::move(spaces), std::move(diffs));
}

FiniteCochainComplex random_complex(Rng& rng, int length, Eigen::Index max_dim, double normalization) {
  std::vector<Eigen::Index> dims, ranks;
  for (int p = 0; p < length; ++p) dims.push_back(random_int(rng, 1, static_cast<int>(max_dim)));
  Eigen::Index before = 0;
  for (int p = 0; p + 1 < length; ++p) {
    const Eigen::Index r = random_rank(rng, std::min(dims[p] - before, dims[p + 1]));
    ranks.push_back(r);
    before = r;
  }
  ranks.push_back(0);
  return random_complex_with_ranks(rng, dims, ranks, normalization);
}

ShortExactTriple random_short_exact(Rng& rng, int length, Eigen::Index max_total_dim, double normalization) {
  const Eigen::Index per_degree = std::max<Eigen::Index>(2, max_total_dim / length);
  std::vector<Eigen::Index> dc, de, rc, re;
  for (int p = 0; p < length; ++p) {
    dc.push_back(random_int(rng, 1, static_cast<int>(per_degree - 1)));
    de.push_back(random_int(rng, 1, static_cast<int>(per_degree - dc.back())));
  }
  Eigen::Index bc = 0, be = 0;
  for (int p = 0; p + 1 < length; ++p) {
    rc.push_back(random_rank(rng, std::min(dc[p] - bc, dc[p + 1])));
    re.push_back(random_rank(rng, std::min(de[p] - be, de[p + 1])));
    bc = rc.back();
    be = re.back();
  }
  rc.push_back(0);
  re.push_back(0);
  const FiniteCochainComplex C = random_complex_with_ranks(rng, dc, rc, normalization);
  const FiniteCochainComplex E = random_complex_with_ranks(rng, de, re, normalization);

  // h^p : E^p -> C^{p+1} with c^{p+1} h^p + h^{p+1} e^p = 0
  std::vector<Matrix> s;
  for (int p = 0; p < length; ++p) s.push_back(0.5 * random_normal(rng, dc[p], de[p]));
  std::vector<Matrix> h;
  for (int p = 0; p + 1 < length; ++p) {
    const Matrix c = C.differential(p).matrix();
    const Matrix e = E.differential(p).matrix();
    Matrix hp = c * s[p] - s[p + 1] * e;
    const Matrix z = linalg::kernel_basis(C.differential(p + 1).matrix());
    const Matrix w = linalg::complement_basis(linalg::image_basis(E.differential(p - 1).matrix()), de[p]);
    hp += z * random_normal(rng, z.cols(), w.cols()) * w.transpose();
    h.push_back(hp);
  }

  std::vector<TracedSpace> dspaces;
  for (int p = 0; p < length; ++p) dspaces.push_back(random_space(rng, dc[p] + de[p], normalization));
  std::vector<TracedMap> ddiffs, j, q;
  for (int p = 0; p + 1 < length; ++p) {
    Matrix m = Matrix::Zero(dc[p + 1] + de[p + 1], dc[p] + de[p]);
    m.topLeftCorner(dc[p + 1], dc[p]) = C.differential(p).matrix();
    m.topRightCorner(dc[p + 1], de[p]) = h[static_cast<std::size_t>(p)];
    m.bottomRightCorner(de[p + 1], de[p]) = E.differential(p).matrix();
    ddiffs.emplace_back(dspaces[p], dspaces[p + 1], m);
  }
  for (int p = 0; p < length; ++p) {
    Matrix jm = Matrix::Zero(dc[p] + de[p], dc[p]);
    jm.topRows(dc[p]).setIdentity();
    Matrix qm = Matrix::Zero(de[p], dc[p] + de[p]);
    qm.rightCols(de[p]).setIdentity();
    j.emplace_back(C.space(p), dspaces[p], jm);
    q.emplace_back(dspaces[p], E.space(p), qm);
  }
  FiniteCochainComplex D(std::move(dspaces), std::move(ddiffs));
  return ShortExactTriple(C, std::move(D), E, std::move(j), std::move(q));
}

namespace {

TracedMap at(const std::vector<TracedMap>& maps, int p, const TracedSpace& source, const TracedSpace& target) {
  if (p < 0 || p >= static_cast<int>(maps.size())) return TracedMap::zero(source, target);
  return maps[static_cast<std::size_t>(p)];
}

Matrix invertible(Rng& rng, Eigen::Index n) {
  Vector scales(n);
  for (Eigen::Index k = 0; k < n; ++k) scales[k] = std::exp(random_uniform(rng, std::log(0.5), std::log(2.0)));
  return random_orthogonal(rng, n) * scales.asDiagonal() * random_orthogonal(rng, n).transpose();
}

}  // namespace

TracedMap HomotopyEquivalence::f_at(int p) const { return at(f, p, C.space(p), D.space(p)); }
TracedMap HomotopyEquivalence::g_at(int p) const { return at(g, p, D.space(p), C.space(p)); }
TracedMap HomotopyEquivalence::T_at(int p) const { return at(T, p, C.space(p), C.space(p - 1)); }

HomotopyEquivalence random_homotopy_equivalence(Rng& rng, int length, Eigen::Index max_dim, double normalization) {
  const Eigen::Index half = std::max<Eigen::Index>(1, max_dim / 2);
  const FiniteCochainComplex C = random_complex(rng, length, half, normalization);

  // acyclic A with dims a_p = r_{p-1} + r_p
  std::vector<Eigen::Index> ar, ad;
  for (int p = 0; p + 1 < length; ++p) ar.push_back(random_int(rng, 0, static_cast<int>(half) / 2 + 1));
  ar.push_back(0);
  for (int p = 0; p < length; ++p) {
    Eigen::Index a = ar[p] + (p > 0 ? ar[p - 1] : 0);
    if (a > max_dim - C.space(p).dim()) {
      ar[p] = 0;
      a = p > 0 ? ar[p - 1] : 0;
    }
    ad.push_back(a);
  }
  const FiniteCochainComplex A = random_complex_with_ranks(rng, ad, ar, normalization);

  std::vector<Eigen::Index> dc;
  std::vector<Matrix> S, Sinv;
  for (int p = 0; p < length; ++p) {
    dc.push_back(C.space(p).dim());
    S.push_back(invertible(rng, dc[p] + ad[p]));
    Sinv.push_back(S.back().inverse());
  }

  std::vector<TracedSpace> dspaces;
  for (int p = 0; p < length; ++p) dspaces.push_back(random_space(rng, dc[p] + ad[p], normalization));
  std::vector<Matrix> dm;
  std::vector<TracedMap> ddiffs;
  for (int p = 0; p + 1 < length; ++p) {
    Matrix block = Matrix::Zero(dc[p + 1] + ad[p + 1], dc[p] + ad[p]);
    block.topLeftCorner(dc[p + 1], dc[p]) = C.differential(p).matrix();
    block.bottomRightCorner(ad[p + 1], ad[p]) = A.differential(p).matrix();
    dm.push_back(S[p + 1] * block * Sinv[p]);
    ddiffs.emplace_back(dspaces[p], dspaces[p + 1], dm.back());
  }
  FiniteCochainComplex D(dspaces, ddiffs);

  auto dmat = [&](int p, Eigen::Index rows, Eigen::Index cols) -> Matrix {
    if (p < 0 || p + 1 >= length) return Matrix::Zero(rows, cols);
    return dm[static_cast<std::size_t>(p)];
  };
  auto cmat = [&](int p) -> Matrix { return C.differential(p).matrix(); };
  auto dim_c = [&](int p) -> Eigen::Index { return C.space(p).dim(); };
  auto dim_d = [&](int p) -> Eigen::Index { return D.space(p).dim(); };

  std::vector<Matrix> f0, g0, K, L;
  const double kappa = random_uniform(rng, 0.0, 0.5);
  for (int p = 0; p < length; ++p) {
    f0.push_back(S[p].leftCols(dc[p]));
    g0.push_back(Sinv[p].topRows(dc[p]));
    K.push_back(kappa * random_normal(rng, dim_c(p - 1), dim_d(p)));  // D^p -> C^{p-1}
    L.push_back(kappa * random_normal(rng, dim_d(p - 1), dim_c(p)));  // C^p -> D^{p-1}
  }
  auto Kat = [&](int p) -> Matrix {
    if (p < 0 || p >= length) return Matrix::Zero(dim_c(p - 1), dim_d(p));
    return K[static_cast<std::size_t>(p)];
  };
  auto Lat = [&](int p) -> Matrix {
    if (p < 0 || p >= length) return Matrix::Zero(dim_d(p - 1), dim_c(p));
    return L[static_cast<std::size_t>(p)];
  };

  HomotopyEquivalence out{C, D, {}, {}, {}};
  std::vector<Matrix> gm;
  for (int p = 0; p < length; ++p) {
    const Matrix g = g0[p] + cmat(p - 1) * Kat(p) + Kat(p + 1) * dmat(p, dim_d(p + 1), dim_d(p));
    const Matrix f = f0[p] + dmat(p - 1, dim_d(p), dim_d(p - 1)) * Lat(p) + Lat(p + 1) * cmat(p);
    gm.push_back(g);
    out.g.emplace_back(D.space(p), C.space(p), g);
    out.f.emplace_back(C.space(p), D.space(p), f);
  }
  for (int p = 0; p < length; ++p) {
    Matrix t = Kat(p) * f0[p];
    if (p > 0) t += gm[static_cast<std::size_t>(p - 1)] * Lat(p);
    out.T.emplace_back(C.space(p), C.space(p - 1), t);
  }
  return out;
}

}  // namespace l2tor::sdf
