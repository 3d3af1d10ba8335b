#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphex/families.hpp"
#include "sphex/parabolic.hpp"

using namespace sphex;

namespace {

QVec qv(std::vector<long> v) {
  QVec r;
  for (long x : v) r.push_back(Rat(x));
  return r;
}

QMatrix qm(std::vector<std::vector<long>> rows) {
  std::vector<QVec> r;
  for (auto& row : rows) r.push_back(qv(row));
  return QMatrix::from_rows(r, int(rows[0].size()));
}

QVec unit_vec(int n, int i) {
  QVec v(n, rat(0));
  v[i] = rat(1);
  return v;
}

}  // namespace

TEST_CASE("sl2 structure constants") {
  auto sl2 = sl_algebra(2);
  const auto& g = sl2.g;
  REQUIRE(g.dim() == 3);
  // Basis order: H = diag(1,-1), E = E_12, F = E_21.
  QVec H = unit_vec(3, 0), E = unit_vec(3, 1), F = unit_vec(3, 2);
  CHECK(g.bracket(H, E) == scale(E, rat(2)));
  CHECK(g.bracket(H, F) == scale(F, rat(-2)));
  CHECK(g.bracket(E, F) == H);
  CHECK(g.bracket(E, E) == QVec(3, rat(0)));

  CHECK(g.theta(H) == scale(H, rat(-1)));
  CHECK(g.theta(E) == scale(F, rat(-1)));
  CHECK(g.theta(F) == scale(E, rat(-1)));

  CHECK(g.gram() == qm({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

  QMatrix adH = g.ad(H);
  CHECK(mul(adH, E) == scale(E, rat(2)));
  CHECK(mul(adH, H) == QVec(3, rat(0)));

  auto c = g.coords_of(qm({{3, 5}, {7, -3}}));
  REQUIRE(c.has_value());
  CHECK(*c == qv({3, 5, 7}));
  CHECK(g.matrix_of(*c) == qm({{3, 5}, {7, -3}}));
  CHECK_FALSE(g.coords_of(qm({{1, 0}, {0, 1}})).has_value());

  CHECK(g.theta_eigenspace(1) == Subspace::span(3, {qv({0, 1, -1})}));
  CHECK(g.theta_eigenspace(-1) == Subspace::span(3, {H, qv({0, 1, 1})}));
}

TEST_CASE("build rejects bad bases") {
  QMatrix e12 = qm({{0, 1}, {0, 0}});
  QMatrix e11 = qm({{1, 0}, {0, 0}});
  QMatrix h = qm({{1, 0}, {0, -1}});
  QMatrix e21 = qm({{0, 0}, {1, 0}});

  CHECK_THROWS_WITH_AS(LieAlgebra::build({e12, e11}),
                       "lie algebra: basis not theta-stable", error);
  CHECK_THROWS_WITH_AS(LieAlgebra::build({h, h + h}),
                       "lie algebra: basis not linearly independent", error);
  CHECK_THROWS_WITH_AS(LieAlgebra::build({e12, e21}),
                       "lie algebra: not closed under bracket", error);
  CHECK_THROWS_AS(LieAlgebra::build({}), error);
  CHECK_THROWS_AS(LieAlgebra::build({qm({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}), e12}),
                  error);

  // The ambient algebra itself must be theta-stable; one-sided nilpotents
  // only occur as subspaces inside it.
  CHECK_THROWS_WITH_AS(LieAlgebra::build({e12}),
                       "lie algebra: basis not theta-stable", error);
  auto sl2 = sl_algebra(2).g;
  CHECK(sl2.is_subalgebra(Subspace::span(3, {unit_vec(3, 1)})));
}

TEST_CASE("subspace operations on sl2") {
  auto g = sl_algebra(2).g;
  Subspace borel = Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)});
  CHECK(g.is_subalgebra(borel));
  CHECK_FALSE(g.is_subalgebra(Subspace::span(3, {unit_vec(3, 1), unit_vec(3, 2)})));

  CHECK(g.derived(Subspace::full(3)) == Subspace::full(3));
  CHECK(g.derived(borel) == Subspace::span(3, {unit_vec(3, 1)}));

  Subspace a = Subspace::span(3, {unit_vec(3, 0)});
  CHECK(g.centralizer_in(Subspace::full(3), a) == a);
  CHECK(g.normalizer_of(Subspace::span(3, {unit_vec(3, 1)})) == borel);
  CHECK(g.ideal_closure(Subspace::span(3, {unit_vec(3, 1)}), Subspace::full(3)) ==
        Subspace::full(3));
}

TEST_CASE("characteristic polynomial and rational roots") {
  CHECK(char_poly(qm({{2, 0}, {0, 3}})) == qv({6, -5, 1}));
  CHECK(char_poly(qm({{0, 1}, {0, 0}})) == qv({0, 0, 1}));

  auto r = rational_roots(qv({6, -5, 1}));
  REQUIRE(r.has_value());
  CHECK(*r == std::vector<Rat>{rat(2), rat(3)});

  r = rational_roots(qv({1, -2, 1}));
  REQUIRE(r.has_value());
  CHECK(*r == std::vector<Rat>{rat(1), rat(1)});

  r = rational_roots(qv({0, 0, 0, 1}));
  REQUIRE(r.has_value());
  CHECK(*r == std::vector<Rat>{rat(0), rat(0), rat(0)});

  r = rational_roots(qv({-3, 5, 2}));
  REQUIRE(r.has_value());
  CHECK(*r == std::vector<Rat>{rat(-3), rat(1, 2)});

  CHECK_FALSE(rational_roots(qv({-2, 0, 1})).has_value());
  CHECK_FALSE(rational_roots(qv({1, 0, 1})).has_value());
}

TEST_CASE("sl2 root datum") {
  auto sl2 = sl_algebra(2);
  auto rd = root_datum(sl2.g, sl2.cartan);
  REQUIRE(rd.roots.size() == 2);
  CHECK(rd.roots[0].weight == qv({-2}));
  CHECK(rd.roots[1].weight == qv({2}));
  CHECK(rd.roots[0].space == Subspace::span(3, {unit_vec(3, 2)}));
  CHECK(rd.roots[1].space == Subspace::span(3, {unit_vec(3, 1)}));
  CHECK(rd.zero_space == sl2.cartan);
  CHECK(rd.m_space.is_zero());
  CHECK(rd.positive == std::vector<int>{1});
  CHECK(rd.simple == std::vector<int>{1});
  CHECK(rd.twist_word.empty());

  CHECK(rd.eval(rd.roots[1].weight, unit_vec(3, 0)) == 2);
  CHECK_THROWS_AS(rd.a_coords(unit_vec(3, 1)), error);

  // An explicit seed on the other side flips the positive system.
  auto flipped = root_datum(sl2.g, sl2.cartan, qv({-1}));
  CHECK(flipped.positive == std::vector<int>{0});
}

TEST_CASE("sl3 root datum") {
  auto sl3 = sl_algebra(3);
  auto rd = root_datum(sl3.g, sl3.cartan);
  REQUIRE(rd.roots.size() == 6);
  for (const auto& r : rd.roots) CHECK(r.space.dim() == 1);
  CHECK(rd.zero_space == sl3.cartan);
  CHECK(rd.m_space.is_zero());

  // Weights on the basis (diag(1,-1,0), diag(0,1,-1)), sorted.
  CHECK(rd.roots[0].weight == qv({-2, 1}));
  CHECK(rd.roots[1].weight == qv({-1, -1}));
  CHECK(rd.roots[2].weight == qv({-1, 2}));
  CHECK(rd.roots[3].weight == qv({1, -2}));
  CHECK(rd.roots[4].weight == qv({1, 1}));
  CHECK(rd.roots[5].weight == qv({2, -1}));

  CHECK(rd.positive == std::vector<int>{2, 4, 5});
  CHECK(rd.simple == std::vector<int>{2, 5});
}

TEST_CASE("root data of orthogonal algebras") {
  auto so21 = so_algebra(2, 1);
  CHECK(so21.g.dim() == 3);
  auto rd21 = root_datum(so21.g, so21.cartan);
  REQUIRE(rd21.roots.size() == 2);
  CHECK(rd21.roots[0].weight == qv({-1}));
  CHECK(rd21.multiplicity(0) == 1);
  CHECK(rd21.m_space.is_zero());

  auto so31 = so_algebra(3, 1);
  CHECK(so31.g.dim() == 6);
  auto rd31 = root_datum(so31.g, so31.cartan);
  REQUIRE(rd31.roots.size() == 2);
  CHECK(rd31.multiplicity(0) == 2);
  CHECK(rd31.multiplicity(1) == 2);
  CHECK(rd31.zero_space.dim() == 2);
  CHECK(rd31.m_space.dim() == 1);

  // Compact so(2) has no split part at all.
  auto so2 = so_algebra(2, 0);
  CHECK(so2.g.dim() == 1);
  CHECK(so2.cartan.is_zero());
  auto rd2 = root_datum(so2.g, so2.cartan);
  CHECK(rd2.roots.empty());
  CHECK(rd2.zero_space == Subspace::full(1));
  CHECK(rd2.m_space == Subspace::full(1));
}

TEST_CASE("sp4 root datum") {
  auto sp4 = sp_algebra(4);
  CHECK(sp4.g.dim() == 10);
  CHECK(sp4.cartan.dim() == 2);
  auto rd = root_datum(sp4.g, sp4.cartan);
  CHECK(rd.roots.size() == 8);
  for (const auto& r : rd.roots) CHECK(r.space.dim() == 1);
  CHECK(rd.positive.size() == 4);
  CHECK(rd.simple.size() == 2);
  CHECK(rd.zero_space == sp4.cartan);
}

TEST_CASE("root datum rejects bad Cartan subspaces") {
  auto sl2 = sl_algebra(2);
  auto sl3 = sl_algebra(3);

  // diag(1,0,-1) alone is centralized by the full diagonal.
  Subspace small = Subspace::span(8, {qv({1, 1, 0, 0, 0, 0, 0, 0})});
  CHECK_THROWS_WITH_AS(root_datum(sl3.g, small), "root_datum: a not maximal", error);

  // H + E + F is symmetric but has irrational eigenvalues.
  Subspace skew = Subspace::span(3, {qv({1, 1, 1})});
  CHECK_THROWS_WITH_AS(root_datum(sl2.g, skew),
                       "realization not split-adapted: ad(a) has irrational eigenvalues",
                       error);

  Subspace notab = Subspace::span(3, {qv({1, 0, 0}), qv({0, 1, 1})});
  CHECK_THROWS_WITH_AS(root_datum(sl2.g, notab), "root_datum: a must be abelian", error);

  Subspace notsym = Subspace::span(3, {qv({0, 1, -1})});
  CHECK_THROWS_WITH_AS(root_datum(sl2.g, notsym),
                       "root_datum: a must lie in the -1 theta eigenspace", error);

  CHECK_THROWS_WITH_AS(root_datum(sl3.g, sl3.cartan, qv({1, -1})),
                       "root_datum: seed covector vanishes on a root", error);
}

TEST_CASE("weyl twists") {
  auto sl2 = sl_algebra(2);
  auto tw2 = weyl_twists(root_datum(sl2.g, sl2.cartan));
  REQUIRE(tw2.size() == 2);
  CHECK(tw2[0].twist_word.empty());
  CHECK(tw2[0].positive == std::vector<int>{1});
  CHECK(tw2[1].twist_word == std::vector<int>{0});
  CHECK(tw2[1].positive == std::vector<int>{0});

  auto sl3 = sl_algebra(3);
  auto tw6 = weyl_twists(root_datum(sl3.g, sl3.cartan));
  CHECK(tw6.size() == 6);
  // Every twist is a genuine positive system: half the roots, closed struct.
  for (const auto& t : tw6) {
    CHECK(t.positive.size() == 3);
    CHECK(t.simple.size() == 2);
  }

  auto prod = product_algebra({sl_algebra(2), sl_algebra(2)});
  CHECK(weyl_twists(root_datum(prod.g, prod.cartan)).size() == 4);

  auto sp4 = sp_algebra(4);
  CHECK(weyl_twists(root_datum(sp4.g, sp4.cartan)).size() == 8);

  auto so2 = so_algebra(2, 0);
  CHECK(weyl_twists(root_datum(so2.g, so2.cartan)).size() == 1);
}

TEST_CASE("product algebra") {
  auto prod = product_algebra({sl_algebra(2), sl_algebra(2)});
  CHECK(prod.g.dim() == 6);
  CHECK(prod.g.matrix_size() == 4);
  CHECK(prod.cartan.dim() == 2);
  CHECK(prod.name == "sl(2,R) x sl(2,R)");

  auto rd = root_datum(prod.g, prod.cartan);
  REQUIRE(rd.roots.size() == 4);
  CHECK(rd.roots[0].weight == qv({-2, 0}));
  CHECK(rd.roots[1].weight == qv({0, -2}));
  CHECK(rd.roots[2].weight == qv({0, 2}));
  CHECK(rd.roots[3].weight == qv({2, 0}));
  CHECK(rd.m_space.is_zero());
  CHECK(rd.positive == std::vector<int>{2, 3});

  // Factors commute.
  QVec e1 = unit_vec(6, 1), f2 = unit_vec(6, 5);
  CHECK(prod.g.bracket(e1, f2) == QVec(6, rat(0)));
}

TEST_CASE("minimal parabolic") {
  auto sl2 = sl_algebra(2);
  auto rd = root_datum(sl2.g, sl2.cartan);
  CHECK(minimal_parabolic(rd) == Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)}));

  auto sl3 = sl_algebra(3);
  CHECK(minimal_parabolic(root_datum(sl3.g, sl3.cartan)).dim() == 5);

  auto so2 = so_algebra(2, 0);
  CHECK(minimal_parabolic(root_datum(so2.g, so2.cartan)) == Subspace::full(1));
}

TEST_CASE("standard parabolic in sl2") {
  auto sl2 = sl_algebra(2);
  auto rd = root_datum(sl2.g, sl2.cartan);

  auto pmin = standard_parabolic(rd, {});
  CHECK(pmin.l == sl2.cartan);
  CHECK(pmin.u == Subspace::span(3, {unit_vec(3, 1)}));
  CHECK(pmin.u_bar == Subspace::span(3, {unit_vec(3, 2)}));
  CHECK(pmin.q == Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 1)}));
  CHECK(pmin.l_n.is_zero());
  CHECK(pmin.l_c.is_zero());
  CHECK(pmin.z_l == sl2.cartan);
  CHECK(pmin.z_l_np == sl2.cartan);
  CHECK(pmin.z_l_cp.is_zero());
  REQUIRE(pmin.sigma_u.size() == 1);
  CHECK(pmin.sigma_u[0].first == qv({2}));
  CHECK(pmin.sigma_u[0].second == 1);

  auto pfull = standard_parabolic(rd, {0});
  CHECK(pfull.q == Subspace::full(3));
  CHECK(pfull.u.is_zero());
  CHECK(pfull.l_n == Subspace::full(3));
  CHECK(pfull.l_c.is_zero());
  CHECK(pfull.z_l.is_zero());
  CHECK(pfull.sigma_u.empty());

  CHECK_THROWS_AS(standard_parabolic(rd, {5}), error);
}

TEST_CASE("standard parabolic in sl3") {
  auto sl3 = sl_algebra(3);
  auto rd = root_datum(sl3.g, sl3.cartan);

  auto p = standard_parabolic(rd, {0});  // marks the simple root (-1,2)
  CHECK(p.l.dim() == 4);
  CHECK(p.u.dim() == 2);
  CHECK(p.q.dim() == 6);
  CHECK(p.l_der.dim() == 3);
  CHECK(p.l_n.dim() == 3);
  CHECK(p.l_c.is_zero());
  CHECK(p.z_l.dim() == 1);
  CHECK(p.z_l_np.dim() == 1);
  CHECK(p.z_l_cp.is_zero());
  REQUIRE(p.sigma_u.size() == 2);
  CHECK(p.sigma_u[0].first == qv({1, 1}));
  CHECK(p.sigma_u[1].first == qv({2, -1}));

  // theta swaps the nilradical and its opposite.
  for (const auto& v : p.u.basis()) CHECK(p.u_bar.contains(sl3.g.theta(v)));
}

TEST_CASE("parabolics of twisted systems") {
  auto sl2 = sl_algebra(2);
  auto tw = weyl_twists(root_datum(sl2.g, sl2.cartan));
  auto p = standard_parabolic(tw[1], {});
  CHECK(p.u == Subspace::span(3, {unit_vec(3, 2)}));
  CHECK(p.u_bar == Subspace::span(3, {unit_vec(3, 1)}));
  CHECK(p.sigma_u[0].first == qv({-2}));
}
