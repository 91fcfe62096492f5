#include "l2tor/sdf/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace l2tor::sdf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Runner {
  CheckReport& report;

  void run(Inequality q) {
    report.checked.push_back(q.item);
    report.result.merge(probe(q));
  }
  void skip(const std::string& item) { report.skipped.push_back(item); }
};

Inequality leq(std::string item) {
  Inequality q;
  q.item = std::move(item);
  return q;
}

}  // namespace

CheckReport check_basic_F(const TracedMap& f, const TracedMap& g, const TracedMap& i, const TracedMap& p, double r) {
  if (!g.source().same_as(f.target()) || !i.source().same_as(f.target()) || !p.target().same_as(f.source()))
    throw std::invalid_argument("check_basic_F: expected f: U->V, g: V->W, i: V->V', p: U0->U");
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("check_basic_F: r must lie in (0, 1)");

  CheckReport report;
  report.check = "basic";
  Runner run{report};

  const TracedMap gf = compose(g, f);
  const auto F_f = sdf_of_map(f), F_g = sdf_of_map(g), F_gf = sdf_of_map(gf);
  const auto B_f = F_f.reduced(), B_g = F_g.reduced(), B_gf = F_gf.reduced();
  const double ng = g.norm(), nf = f.norm();
  report.constants["norm_g"] = ng;
  report.constants["norm_f"] = nf;
  report.constants["r"] = r;

  const bool f_onto = f.surjective();
  // dim(ker g n im f) = rank f - rank gf
  const auto rank_f = static_cast<long>(f.rank());
  const auto rank_gf = static_cast<long>(gf.rank());
  const long ker_g = static_cast<long>(g.source().dim()) - static_cast<long>(g.rank());
  const bool ker_g_meets_im_f_trivially = rank_f == rank_gf;
  const bool ker_g_inside_im_f = ker_g == rank_f - rank_gf;

  {
    auto q = leq("F.1");
    q.lhs.add(F_f);
    q.rhs.add(F_gf, ng);
    run.run(q);
  }
  if (f_onto) {
    auto q = leq("F.2");
    q.lhs.add(F_g);
    q.rhs.add(F_gf, nf);
    run.run(q);
  } else {
    run.skip("F.2");
  }
  {
    auto q = leq("F.3");
    q.lhs.add(F_gf);
    q.rhs.add(F_g, 1.0, 1.0 - r).add(F_f, 1.0, r);
    run.run(q);
  }

  const bool i_ok = i.injective();
  const bool p_ok = p.surjective();
  const TracedMap iF = compose(i, f);
  const TracedMap fp = compose(f, p);
  const auto F_if = sdf_of_map(iF), F_fp = sdf_of_map(fp);
  if (i_ok) {
    report.constants["norm_i_inverse"] = i.inverse_norm();
    auto q = leq("F.4");
    q.lhs.add(F_if);
    q.rhs.add(F_f, i.inverse_norm());
    run.run(q);
  } else {
    run.skip("F.4");
  }
  if (p_ok) {
    auto q = leq("F.5");
    q.lhs.add(F_f);
    q.rhs.add(F_fp, p.norm());
    run.run(q);
  } else {
    run.skip("F.5");
  }
  {
    const TracedMap ff = compose(f.adjoint(), f);
    auto q = leq("F.6");
    q.relation = Relation::Equal;
    q.lhs.add(sdf_of_map(ff), 1.0, 2.0);
    q.rhs.add(F_f);
    run.run(q);
  }

  if (ker_g_meets_im_f_trivially) {
    auto q = leq("Fbar.1");
    q.lhs.add(B_f);
    q.rhs.add(B_gf, ng);
    run.run(q);
  } else {
    run.skip("Fbar.1");
  }
  if (f_onto) {
    auto q = leq("Fbar.2");
    q.lhs.add(B_g);
    q.rhs.add(B_gf, nf);
    run.run(q);
  } else {
    run.skip("Fbar.2");
  }
  if (ker_g_inside_im_f) {
    auto q = leq("Fbar.3");
    q.lhs.add(B_gf);
    q.rhs.add(B_g, 1.0, 1.0 - r).add(B_f, 1.0, r);
    run.run(q);
  } else {
    run.skip("Fbar.3");
  }
  if (i_ok) {
    auto q = leq("Fbar.4");
    q.lhs.add(F_if.reduced());
    q.rhs.add(B_f, i.inverse_norm());
    run.run(q);
  } else {
    run.skip("Fbar.4");
  }
  if (p_ok) {
    report.constants["norm_p"] = p.norm();
    report.constants["norm_p_inverse"] = p.inverse_norm();
    auto q5 = leq("Fbar.5");
    q5.lhs.add(F_fp.reduced());
    q5.rhs.add(B_f, p.inverse_norm());
    run.run(q5);
    auto q6 = leq("Fbar.6");
    q6.lhs.add(B_f);
    q6.rhs.add(F_fp.reduced(), p.norm());
    q6.rhs.constant = p.kernel_dimension();
    run.run(q6);
  } else {
    run.skip("Fbar.5");
    run.skip("Fbar.6");
  }
  {
    auto q = leq("adjoint");
    q.relation = Relation::Equal;
    q.lhs.add(B_f);
    q.rhs.add(reduced_sdf(f.adjoint()));
    run.run(q);
  }
  return report;
}

CheckReport check_block_matrix_F(const TracedMap& phi, const TracedMap& gamma, const TracedMap& xi, double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("check_block_matrix_F: r must lie in (0, 1)");
  const TracedMap m = block_upper(phi, gamma, xi);
  const TracedMap diag = block_diagonal(phi, xi);

  CheckReport report;
  report.check = "block";
  Runner run{report};

  const auto F_m = sdf_of_map(m), F_phi = sdf_of_map(phi), F_xi = sdf_of_map(xi);
  const auto B_m = F_m.reduced(), B_phi = F_phi.reduced(), B_xi = F_xi.reduced();
  const double n_gamma = gamma.norm(), n_phi = phi.norm(), n_xi = xi.norm();
  report.constants["norm_gamma"] = n_gamma;
  report.constants["r"] = r;

  {
    const auto F_d = sdf_of_map(diag);
    auto q = leq("block.1");
    q.relation = Relation::Equal;
    q.lhs.add(F_d);
    q.rhs.add(F_phi).add(F_xi);
    run.run(q);
    auto qb = leq("blockbar.1");
    qb.relation = Relation::Equal;
    qb.lhs.add(F_d.reduced());
    qb.rhs.add(B_phi).add(B_xi);
    run.run(qb);
  }

  const bool phi_invertible = phi.injective() && phi.surjective();
  if (phi_invertible) {
    const double c = 4.0 + 2.0 * n_gamma * phi.inverse_norm();
    report.constants["c_block2"] = c;
    auto q = leq("block.2");
    q.lhs.add(F_m);
    q.rhs.add(F_phi, c).add(F_xi, c);
    run.run(q);
    auto qb = leq("blockbar.2");
    qb.lhs.add(B_m);
    qb.rhs.add(B_phi, c).add(B_xi, c);
    run.run(qb);
  } else {
    run.skip("block.2");
    run.skip("blockbar.2");
  }

  {
    const double c = 4.0 + 2.0 * n_gamma;
    const double upper = std::pow(c, 1.0 / (r - 1.0));
    report.constants["upper_block3"] = upper;
    auto q = leq("block.3");
    q.upper = upper;
    q.lhs.add(F_m);
    q.rhs.add(F_phi, 1.0, r).add(F_xi, c, 1.0 - r);
    run.run(q);
    if (xi.injective() || phi.surjective()) {
      auto qb = leq("blockbar.3");
      qb.upper = upper;
      qb.lhs.add(B_m);
      qb.rhs.add(B_phi, 1.0, r).add(B_xi, c, 1.0 - r);
      run.run(qb);
    } else {
      run.skip("blockbar.3");
    }
  }

  {
    const double c = 2.0 * (1.0 + n_gamma + n_xi);
    auto q = leq("block.4");
    q.lhs.add(F_phi);
    q.rhs.add(F_m, c);
    run.run(q);
    if (xi.injective()) {
      auto qb = leq("blockbar.4");
      qb.lhs.add(B_phi);
      qb.rhs.add(B_m, c);
      run.run(qb);
    } else {
      run.skip("blockbar.4");
    }
  }

  if (phi.surjective()) {
    const double c = 2.0 * (1.0 + n_gamma + n_phi);
    auto q = leq("block.5");
    q.upper = 1.0;
    q.lhs.add(F_xi);
    q.rhs.add(F_m, c);
    run.run(q);
    auto qb = leq("blockbar.5");
    qb.lhs.add(B_xi);
    qb.rhs.add(B_m, c);
    qb.rhs.constant = phi.kernel_dimension();
    run.run(qb);
  } else {
    run.skip("block.5");
    run.skip("blockbar.5");
  }
  return report;
}

ShortExactConstants short_exact_constants(const ShortExactTriple& t, int p) {
  ShortExactConstants k;
  const double nd = t.D().differential(p).norm();
  const double q1 = t.q(p + 1).norm();
  const double qinv = t.q(p).inverse_norm();
  const double jinv1 = t.j(p + 1).inverse_norm();
  const double jp = t.j(p).norm();
  k.c_E = (4.0 + 2.0 * nd) * q1 * qinv;
  k.c_C = std::sqrt(jinv1) * jp;
  k.c_delta = std::sqrt(jinv1) * (4.0 + 2.0 * jinv1 * nd) * qinv;
  const double a = 4.0 + 2.0 * nd;
  const double b = 4.0 + 2.0 * jinv1 * nd;
  k.c_1 = std::min(1.0 / std::sqrt(a), 1.0 / std::sqrt(b));
  k.c_1_proof = std::min(1.0 / (a * a), 1.0 / (b * b));
  return k;
}

CheckReport check_short_exact(const ShortExactTriple& t, int p, double upper) {
  const ShortExactConstants k = short_exact_constants(t, p);
  CheckReport report;
  report.check = "short-exact";
  report.constants["c_E"] = k.c_E;
  report.constants["c_C"] = k.c_C;
  report.constants["c_delta"] = k.c_delta;
  report.constants["c_1"] = k.c_1;
  report.constants["c_1_proof"] = k.c_1_proof;
  Runner run{report};

  auto q = leq("short-exact");
  q.upper = upper > 0.0 ? upper : k.c_1;
  q.lhs.add(complex_sdf(t.D(), p).reduced());
  q.rhs.add(complex_sdf(t.E(), p).reduced(), k.c_E, 0.5);
  q.rhs.add(reduced_sdf(t.connecting_map(p)), k.c_delta, 0.25);
  q.rhs.add(complex_sdf(t.C(), p).reduced(), k.c_C, 0.25);
  run.run(q);
  return report;
}

double homotopy_residual(const HomotopyEquivalence& h) {
  double worst = 0.0;
  for (int p = h.C.lowest_degree(); p <= h.C.highest_degree(); ++p) {
    const Matrix gf = h.g_at(p).matrix() * h.f_at(p).matrix();
    const Matrix id = Matrix::Identity(gf.rows(), gf.cols());
    const Matrix tc = h.T_at(p + 1).matrix() * h.C.differential(p).matrix();
    const Matrix ct = h.C.differential(p - 1).matrix() * h.T_at(p).matrix();
    const TracedMap residual(h.C.space(p), h.C.space(p), gf - id - tc - ct);
    worst = std::max(worst, residual.norm());
  }
  return worst;
}

CheckReport check_gromov_shubin(const HomotopyEquivalence& h, int p) {
  constexpr double kHomotopyTolerance = 1e-10;
  const double residual = homotopy_residual(h);
  if (!(residual < kHomotopyTolerance))
    throw std::invalid_argument("check_gromov_shubin: g f is not homotopic to id via T (residual " +
                                std::to_string(residual) + ")");
  CheckReport report;
  report.check = "gromov-shubin";
  const double nf = h.f_at(p + 1).norm();
  const double ng = h.g_at(p).norm();
  const double nt = h.T_at(p + 1).norm();
  const double scale = nf * nf * ng * ng;
  report.constants["homotopy_residual"] = residual;
  report.constants["scale"] = scale;
  report.constants["norm_T"] = nt;
  Runner run{report};
  const auto F_C = complex_sdf(h.C, p);
  const auto F_D = complex_sdf(h.D, p);

  auto q = leq("gromov-shubin");
  q.upper = nt > 0.0 ? 1.0 / (4.0 * nt * nt) : kInf;
  report.constants["upper"] = q.upper;
  q.lhs.add(F_C);
  q.rhs.add(F_D, scale);
  run.run(q);

  // from |x| (1 - |T| l) <= |g| |P f x| on subspaces where |c x| <= l |x|
  auto qd = leq("gromov-shubin.derived");
  qd.upper = nt > 0.0 ? 1.0 / (2.0 * nt) : kInf;
  report.constants["scale_derived"] = 2.0 * nf * ng;
  report.constants["upper_derived"] = qd.upper;
  qd.lhs.add(F_C);
  qd.rhs.add(F_D, 2.0 * nf * ng);
  run.run(qd);
  return report;
}

}  // namespace l2tor::sdf
