#include "sphex/compression.hpp"

#include <algorithm>

namespace sphex {

QVec az_coords(const LocalStructure& ls, const QVec& x) {
  const Subspace& az = ls.a_z;
  QMatrix cols = QMatrix::from_rows(az.basis(), az.ambient()).transpose();
  auto c = solve(cols, x);
  if (!c || mul(cols, *c) != x) throw error("az_coords: vector outside a_z");
  return *c;
}

QVec restrict_to_az(const LocalStructure& ls, const QVec& weight) {
  const RootDatum& rd = ls.q.rd;
  QVec out;
  for (const auto& b : ls.a_z.basis()) out.push_back(dot(weight, rd.a_coords(b)));
  return out;
}

QMatrix a_to_az_matrix(const LocalStructure& ls) {
  const RootDatum& rd = ls.q.rd;
  const LieAlgebra& g = *rd.g;
  int r = rd.cartan.dim();
  QMatrix m(ls.rank, r);
  for (int j = 0; j < r; ++j) {
    QVec img = orth_project(rd.cartan.basis()[j], ls.a_z, g.gram());
    QVec c = az_coords(ls, img);
    for (int i = 0; i < ls.rank; ++i) m.at(i, j) = c[i];
  }
  return m;
}

std::vector<GraphMapTerm> graph_map(const LocalStructure& ls, const Subspace& h) {
  const RootDatum& rd = ls.q.rd;

  Subspace transverse = sum(sum(ls.a_z, ls.m_z), ls.q.u);
  Subspace lu = sum(ls.q.l, ls.q.u);
  Subspace rest_d = sum(sum(ls.q.l_n, ls.q.u), ls.q.u_bar);
  Subspace rest_dh = sum(ls.d_h, rest_d);

  std::vector<GraphMapTerm> out;
  for (const auto& su : ls.q.sigma_u) {
    const QVec& alpha = su.first;
    int ai = rd.index_of(alpha);
    int ni = rd.index_of(scale(alpha, rat(-1)));
    for (const auto& xm : rd.roots[ni].space.basis()) {
      GraphMapTerm t;
      t.root_index = ai;
      t.x_minus = xm;
      t.lift = project(xm, h, transverse);

      QVec back = project(t.lift, ls.q.u_bar, lu);
      if (back != xm)
        throw error("graph map: lift does not reproduce the opposite root vector");

      QVec d0 = project(t.lift, ls.d, rest_d);
      t.d_part = project(d0, ls.d_h_perp, rest_dh);

      QVec in_u = project(t.lift, ls.q.u, sum(ls.q.u_bar, ls.q.l));
      for (const auto& sb : ls.q.sigma_u) {
        int bi = rd.index_of(sb.first);
        Subspace others = ls.q.u_bar;
        for (const auto& sg : ls.q.sigma_u)
          if (sg.first != sb.first)
            others = sum(others, rd.roots[rd.index_of(sg.first)].space);
        others = sum(others, ls.q.l);
        QVec comp = project(in_u, rd.roots[bi].space, others);
        if (!is_zero(comp)) t.beta.push_back(bi);
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<QVec> monoid_generators(const LocalStructure& ls, const Subspace& h) {
  const RootDatum& rd = ls.q.rd;
  std::vector<QVec> gens;
  for (const auto& t : graph_map(ls, h)) {
    const QVec& alpha = rd.roots[t.root_index].weight;
    if (!is_zero(t.d_part)) gens.push_back(restrict_to_az(ls, alpha));
    for (int bi : t.beta)
      gens.push_back(restrict_to_az(ls, add(alpha, rd.roots[bi].weight)));
  }
  std::vector<QVec> out;
  for (auto& gv : gens)
    if (!is_zero(gv)) out.push_back(gv);
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CompressionResult compression_cone(const LocalStructure& ls, const Subspace& h) {
  const RootDatum& rd = ls.q.rd;
  CompressionResult res;
  res.monoid = monoid_generators(ls, h);
  res.cone = Cone::from_inequalities(ls.rank, res.monoid);
  res.sharp = res.cone.edge().is_zero();

  std::vector<QVec> simple_ineqs;
  for (int i : rd.simple) simple_ineqs.push_back(rd.roots[i].weight);
  res.a_minus = Cone::from_inequalities(rd.cartan.dim(), simple_ineqs);
  res.a_minus_image = res.a_minus.linear_image(a_to_az_matrix(ls));
  res.wavefront = res.a_minus_image.equals(res.cone);
  return res;
}

Cone support_cone(int ambient, const std::vector<QVec>& weights) {
  std::vector<QVec> ineqs;
  for (const auto& w : weights)
    if (!is_zero(w)) ineqs.push_back(w);
  return Cone::from_inequalities(ambient, ineqs);
}

namespace {

mpz_class binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace

WedgeSupport plucker_support(const LocalStructure& ls, const Subspace& h) {
  const RootDatum& rd = ls.q.rd;
  const LieAlgebra& g = *rd.g;
  int n = g.dim();
  int d = h.dim();
  if (binomial(n, d) > 1000000)
    throw error("wedge support: exterior power dimension exceeds the budget");

  // Weight-adapted basis of g: centralizer first, then the root spaces, each
  // tagged with the restriction of its weight to a_z.
  std::vector<QVec> wbasis;
  std::vector<QVec> wwt;
  QVec zero_wt(ls.rank, rat(0));
  for (const auto& v : rd.zero_space.basis()) {
    wbasis.push_back(v);
    wwt.push_back(zero_wt);
  }
  for (const auto& r : rd.roots) {
    QVec rw = restrict_to_az(ls, r.weight);
    for (const auto& v : r.space.basis()) {
      wbasis.push_back(v);
      wwt.push_back(rw);
    }
  }
  if (int(wbasis.size()) != n)
    throw error("wedge support: weight basis does not span");

  QMatrix cols = QMatrix::from_rows(wbasis, n).transpose();
  QMatrix hm(d, n);
  for (int i = 0; i < d; ++i) {
    auto c = solve(cols, h.basis()[i]);
    if (!c) throw error("wedge support: weight basis does not span");
    hm.set_row(i, *c);
  }

  WedgeSupport ws;
  ws.mu0 = QVec(ls.rank, rat(0));
  for (const auto& [alpha, mult] : ls.q.sigma_u) {
    QVec rw = restrict_to_az(ls, alpha);
    ws.mu0 = sub(ws.mu0, scale(rw, rat(mult)));
  }

  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  std::vector<QVec> seen;
  bool base_hit = false;
  for (;;) {
    QMatrix minor(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) minor.at(i, j) = hm.at(i, idx[j]);
    if (det(minor) != 0) {
      QVec wt(ls.rank, rat(0));
      for (int j = 0; j < d; ++j) wt = add(wt, wwt[idx[j]]);
      wt = sub(wt, ws.mu0);
      if (is_zero(wt)) base_hit = true;
      seen.push_back(wt);
    }
    // next combination of d indices out of n
    int k = d - 1;
    while (k >= 0 && idx[k] == n - d + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (!base_hit)
    throw error("wedge support: coordinate of the limiting subalgebra vanishes");

  std::sort(seen.begin(), seen.end(), lex_less);
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  ws.support = std::move(seen);
  ws.cone = support_cone(ls.rank, ws.support);
  return ws;
}

}  // namespace sphex
