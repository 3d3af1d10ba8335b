#include "sphex/parabolic.hpp"

#include <algorithm>
#include <set>

namespace sphex {

Subspace minimal_parabolic(const RootDatum& rd) {
  std::vector<QVec> gens = rd.zero_space.basis();
  for (int i : rd.positive)
    for (const auto& v : rd.roots[i].space.basis()) gens.push_back(v);
  return Subspace::span(rd.g->dim(), gens);
}

Parabolic standard_parabolic(const RootDatum& rd, const std::vector<int>& marked) {
  const LieAlgebra& g = *rd.g;
  std::set<int> mk(marked.begin(), marked.end());
  for (int m : mk)
    if (m < 0 || m >= int(rd.simple.size()))
      throw error("standard_parabolic: marked index out of range");

  Parabolic p;
  p.rd = rd;
  p.marked.assign(mk.begin(), mk.end());

  // Simple-root coefficients of each positive root decide whether it stays in
  // the Levi (support inside the marked set) or feeds the nilradical.
  int r = rd.cartan.dim();
  std::vector<QVec> srows;
  for (int i : rd.simple) srows.push_back(rd.roots[i].weight);
  QMatrix scols = QMatrix::from_rows(srows, r).transpose();

  std::vector<QVec> l_gens = rd.zero_space.basis();
  std::vector<QVec> u_gens, ubar_gens;
  for (int i : rd.positive) {
    auto c = solve(scols, rd.roots[i].weight);
    if (!c) throw error("standard_parabolic: root outside the simple span");
    bool in_levi = true;
    for (size_t s = 0; s < c->size(); ++s)
      if ((*c)[s] != 0 && !mk.count(int(s))) { in_levi = false; break; }

    int neg = rd.index_of(scale(rd.roots[i].weight, rat(-1)));
    if (in_levi) {
      for (const auto& v : rd.roots[i].space.basis()) l_gens.push_back(v);
      for (const auto& v : rd.roots[neg].space.basis()) l_gens.push_back(v);
    } else {
      for (const auto& v : rd.roots[i].space.basis()) u_gens.push_back(v);
      for (const auto& v : rd.roots[neg].space.basis()) ubar_gens.push_back(v);
      p.sigma_u.push_back({rd.roots[i].weight, rd.roots[i].space.dim()});
    }
  }
  std::sort(p.sigma_u.begin(), p.sigma_u.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });

  p.l = Subspace::span(g.dim(), l_gens);
  p.u = Subspace::span(g.dim(), u_gens);
  p.u_bar = Subspace::span(g.dim(), ubar_gens);
  p.q = sum(p.l, p.u);

  Subspace s_space = g.theta_eigenspace(-1);
  p.l_der = g.derived(p.l);
  p.l_n = g.ideal_closure(intersect(p.l_der, s_space), p.l_der);
  p.l_c = g.centralizer_in(p.l_der, p.l_n);
  p.z_l = g.centralizer_in(p.l, p.l);
  p.z_l_np = intersect(p.z_l, s_space);
  p.z_l_cp = intersect(p.z_l, g.theta_eigenspace(1));

  if (!g.is_subalgebra(p.l) || !g.is_subalgebra(p.q))
    throw error("standard_parabolic: construction is not a subalgebra");
  if (sum(sum(p.z_l, p.l_n), p.l_c) != p.l ||
      p.z_l.dim() + p.l_n.dim() + p.l_c.dim() != p.l.dim())
    throw error("standard_parabolic: Levi splitting failed");
  if (p.z_l_np.dim() + p.z_l_cp.dim() != p.z_l.dim())
    throw error("standard_parabolic: Levi center splitting failed");
  if (!rd.cartan.contains(p.z_l_np))
    throw error("standard_parabolic: Levi center escapes the Cartan subspace");
  for (const auto& x : p.q.basis())
    for (const auto& y : p.u.basis())
      if (!p.u.contains(g.bracket(x, y)))
        throw error("standard_parabolic: nilradical is not an ideal");
  return p;
}

}  // namespace sphex
