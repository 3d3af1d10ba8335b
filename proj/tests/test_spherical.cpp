#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphex/families.hpp"
#include "sphex/spherical.hpp"

using namespace sphex;

namespace {

QVec qv(std::vector<long> v) {
  QVec r;
  for (long x : v) r.push_back(Rat(x));
  return r;
}

QVec unit_vec(int n, int i) {
  QVec v(n, rat(0));
  v[i] = rat(1);
  return v;
}

}  // namespace

// sl(2,R) basis order: H, E, F.

TEST_CASE("sl2 with so(1,1): split hyperbola") {
  auto sl2 = sl_algebra(2);
  Subspace h = Subspace::span(3, {qv({0, 1, 1})});

  auto oo = find_open_parabolic(sl2.g, sl2.cartan, h);
  CHECK(oo.rd.twist_word.empty());
  CHECK(oo.p_min == Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)}));

  auto ls = local_structure(oo);
  CHECK(ls.q.marked.empty());
  CHECK(ls.l_h.is_zero());
  CHECK(ls.a_h.is_zero());
  CHECK(ls.a_z == sl2.cartan);
  CHECK(ls.rank == 1);
  CHECK(ls.m_z.is_zero());
  CHECK(ls.d == sl2.cartan);
  CHECK(ls.d_h.is_zero());
  CHECK(ls.d_h_perp == sl2.cartan);

  auto ns = normalizer_split(oo);
  CHECK(ns.normalizer == h);
  CHECK(ns.a_tilde.is_zero());
  CHECK(ns.compact_quotient);

  CHECK(limiting_subalgebra(ls, h) == Subspace::span(3, {unit_vec(3, 2)}));
}

TEST_CASE("sl2 with so(2): hyperbolic plane") {
  auto sl2 = sl_algebra(2);
  Subspace h = Subspace::span(3, {qv({0, 1, -1})});

  auto oo = find_open_parabolic(sl2.g, sl2.cartan, h);
  CHECK(oo.rd.twist_word.empty());

  auto ls = local_structure(oo);
  CHECK(ls.q.marked.empty());
  CHECK(ls.a_z == sl2.cartan);
  CHECK(ls.rank == 1);
  CHECK(ls.m_z.is_zero());

  auto ns = normalizer_split(oo);
  CHECK(ns.compact_quotient);
  CHECK(limiting_subalgebra(ls, h) == Subspace::span(3, {unit_vec(3, 2)}));
}

TEST_CASE("sl2 with the nilpotent line") {
  auto sl2 = sl_algebra(2);
  Subspace h = Subspace::span(3, {unit_vec(3, 1)});  // span{E}

  auto oo = find_open_parabolic(sl2.g, sl2.cartan, h);
  CHECK(oo.rd.twist_word == std::vector<int>{0});
  CHECK(oo.p_min == Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 2)}));

  auto ls = local_structure(oo);
  CHECK(ls.q.marked.empty());
  CHECK(ls.l_h.is_zero());
  CHECK(ls.a_z == sl2.cartan);
  CHECK(ls.rank == 1);
  CHECK(ls.q.u == Subspace::span(3, {unit_vec(3, 2)}));
  CHECK(ls.q.u_bar == h);

  auto ns = normalizer_split(oo);
  CHECK(ns.normalizer == Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)}));
  CHECK(ns.a_tilde == sl2.cartan);
  CHECK_FALSE(ns.compact_quotient);

  // The subalgebra is already its own degeneration.
  CHECK(limiting_subalgebra(ls, h) == h);
}

TEST_CASE("product sl2 x sl2 with the diagonal") {
  auto prod = product_algebra({sl_algebra(2), sl_algebra(2)});
  Subspace h = Subspace::span(
      6, {qv({1, 0, 0, 1, 0, 0}), qv({0, 1, 0, 0, 1, 0}), qv({0, 0, 1, 0, 0, 1})});

  auto oo = find_open_parabolic(prod.g, prod.cartan, h);
  CHECK(oo.rd.twist_word == std::vector<int>{0});

  auto ls = local_structure(oo);
  CHECK(ls.q.marked.empty());
  CHECK(ls.l_h == Subspace::span(6, {qv({1, 0, 0, 1, 0, 0})}));
  CHECK(ls.a_h == Subspace::span(6, {qv({1, 0, 0, 1, 0, 0})}));
  CHECK(ls.a_z == Subspace::span(6, {qv({1, 0, 0, -1, 0, 0})}));
  CHECK(ls.rank == 1);
  CHECK(ls.m_z.is_zero());
  CHECK(ls.q.u == Subspace::span(6, {unit_vec(6, 1), unit_vec(6, 5)}));

  auto ns = normalizer_split(oo);
  CHECK(ns.normalizer == h);
  CHECK(ns.compact_quotient);

  auto lim = limiting_subalgebra(ls, h);
  CHECK(lim.dim() == 3);
  CHECK(lim == Subspace::span(6, {qv({1, 0, 0, 1, 0, 0}), unit_vec(6, 2),
                                  unit_vec(6, 4)}));
}

// sl(3,R) basis order: diag(1,-1,0), diag(0,1,-1), E12, E13, E23, E21, E31, E32.

TEST_CASE("sl3 with so(2,1)") {
  auto sl3 = sl_algebra(3);
  QVec r12 = qv({0, 0, 1, 0, 0, -1, 0, 0});
  QVec s13 = qv({0, 0, 0, 1, 0, 0, 1, 0});
  QVec s23 = qv({0, 0, 0, 0, 1, 0, 0, 1});
  Subspace h = Subspace::span(8, {r12, s13, s23});
  REQUIRE(sl3.g.is_subalgebra(h));

  auto oo = find_open_parabolic(sl3.g, sl3.cartan, h);
  CHECK(oo.rd.twist_word.empty());

  auto ls = local_structure(oo);
  CHECK(ls.q.marked.empty());
  CHECK(ls.l_h.is_zero());
  CHECK(ls.a_h.is_zero());
  CHECK(ls.a_z == sl3.cartan);
  CHECK(ls.rank == 2);
  CHECK(ls.m_z.is_zero());
  CHECK(ls.q.u.dim() == 3);

  auto ns = normalizer_split(oo);
  CHECK(ns.a_tilde.is_zero());
  CHECK(ns.compact_quotient);

  auto lim = limiting_subalgebra(ls, h);
  CHECK(lim == Subspace::span(8, {unit_vec(8, 5), unit_vec(8, 6), unit_vec(8, 7)}));
}

TEST_CASE("pairs that are not spherical are rejected") {
  auto sl2 = sl_algebra(2);
  Subspace torus = Subspace::span(3, {unit_vec(3, 0)});
  CHECK_THROWS_WITH_AS(
      find_open_parabolic(sl2.g, sl2.cartan, torus),
      "spherical pair: no open orbit of a minimal parabolic through the base "
      "point; replace the subalgebra by a suitable conjugate",
      error);

  Subspace notclosed = Subspace::span(3, {unit_vec(3, 1), unit_vec(3, 2)});
  CHECK_THROWS_WITH_AS(
      find_open_parabolic(sl2.g, sl2.cartan, notclosed),
      "spherical pair: subalgebra input is not closed under bracket", error);
}
