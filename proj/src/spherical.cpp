#include "sphex/spherical.hpp"

namespace sphex {

OpenOrbit find_open_parabolic(const LieAlgebra& g, const Subspace& a,
                              const Subspace& h, const std::optional<QVec>& seed) {
  if (h.ambient() != g.dim())
    throw error("spherical pair: subalgebra ambient mismatch");
  if (!g.is_subalgebra(h))
    throw error("spherical pair: subalgebra input is not closed under bracket");

  RootDatum rd = root_datum(g, a, seed);
  for (const auto& tw : weyl_twists(rd)) {
    Subspace p = minimal_parabolic(tw);
    if (sum(p, h) == Subspace::full(g.dim())) return {tw, p, h};
  }
  throw error(
      "spherical pair: no open orbit of a minimal parabolic through the base "
      "point; replace the subalgebra by a suitable conjugate");
}

LocalStructure local_structure(const OpenOrbit& oo) {
  const RootDatum& rd = oo.rd;
  const LieAlgebra& g = *rd.g;
  const QMatrix& gram = g.gram();

  std::optional<Parabolic> found;
  int nsimple = int(rd.simple.size());
  for (long mask = 0; mask < (1L << nsimple); ++mask) {
    std::vector<int> marked;
    for (int s = 0; s < nsimple; ++s)
      if (mask & (1L << s)) marked.push_back(s);
    Parabolic p = standard_parabolic(rd, marked);
    Subspace qh = intersect(p.q, oo.h);
    if (!p.l.contains(qh)) continue;
    if (!qh.contains(p.l_n)) continue;
    if (sum(oo.p_min, qh) != p.q) continue;
    if (found)
      throw error(
          "local structure: adapted parabolic is not unique; the pair violates "
          "the real sphericality assumptions");
    found = std::move(p);
  }
  if (!found)
    throw error(
        "local structure: no adapted parabolic exists; the pair violates the "
        "real sphericality assumptions");

  LocalStructure ls;
  ls.q = std::move(*found);
  ls.l_h = intersect(ls.q.l, oo.h);

  Subspace z_np = ls.q.z_l_np;
  ls.a_h = orth_project(ls.l_h, z_np, gram);
  ls.a_z = intersect(z_np, orth_complement(ls.a_h, gram));
  ls.d = sum(ls.q.z_l, ls.q.l_c);
  ls.d_h = intersect(ls.l_h, ls.d);
  ls.d_h_perp = intersect(ls.d, orth_complement(ls.d_h, gram));
  ls.m_z = intersect(ls.d_h_perp, orth_complement(ls.a_z, gram));
  ls.rank = ls.a_z.dim();

  if (ls.a_h.dim() + ls.a_z.dim() != z_np.dim())
    throw error("local structure: split center does not decompose");
  if (ls.l_h.dim() != ls.q.l_n.dim() + ls.d_h.dim())
    throw error("local structure: Levi part of h does not decompose");
  Subspace deco = sum(sum(sum(oo.h, ls.a_z), ls.m_z), ls.q.u);
  int total = oo.h.dim() + ls.a_z.dim() + ls.m_z.dim() + ls.q.u.dim();
  if (deco != Subspace::full(g.dim()) || total != g.dim())
    throw error("local structure: transverse splitting failed");
  return ls;
}

NormalizerSplit normalizer_split(const OpenOrbit& oo) {
  const LieAlgebra& g = *oo.rd.g;
  const QMatrix& gram = g.gram();

  NormalizerSplit ns;
  ns.normalizer = g.normalizer_of(oo.h);
  Subspace w = intersect(ns.normalizer, oo.rd.zero_space);
  Subspace wh = intersect(oo.h, oo.rd.zero_space);
  Subspace extra = intersect(w, orth_complement(wh, gram));
  ns.a_tilde = orth_project(extra, oo.rd.cartan, gram);
  ns.compact_quotient = ns.a_tilde.is_zero();
  return ns;
}

Subspace limiting_subalgebra(const LocalStructure& ls, const Subspace& h) {
  const LieAlgebra& g = *ls.q.rd.g;
  Subspace lim = sum(ls.q.u_bar, ls.l_h);
  if (lim.dim() != h.dim() || !g.is_subalgebra(lim))
    throw error("limiting subalgebra is defective");
  return lim;
}

}  // namespace sphex
