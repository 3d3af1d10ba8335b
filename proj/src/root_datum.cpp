#include "sphex/root_datum.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace sphex {

QVec char_poly(const QMatrix& m) {
  if (m.rows() != m.cols()) throw error("char_poly: matrix not square");
  int n = m.rows();
  QVec coeff(n + 1, rat(0));
  coeff[n] = rat(1);
  // Faddeev-LeVerrier: A_1 = M, c_k = -tr(A_k)/k, A_{k+1} = M(A_k + c_k I).
  QMatrix a = m;
  for (int k = 1; k <= n; ++k) {
    Rat c = -a.trace() / k;
    coeff[n - k] = c;
    if (k < n) a = m * (a + c * QMatrix::identity(n));
  }
  return coeff;
}

namespace {

// Positive divisors by trial division; nullopt when the search is too large.
std::optional<std::vector<mpz_class>> divisors(const mpz_class& value) {
  mpz_class v = abs(value);
  std::vector<mpz_class> out;
  long steps = 0;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (++steps > 2000000) return std::nullopt;
    if (v % d == 0) {
      out.push_back(d);
      mpz_class e = v / d;
      if (e != d) out.push_back(e);
    }
  }
  return out;
}

Rat eval_poly(const QVec& poly, const Rat& x) {
  Rat v = rat(0);
  for (int k = int(poly.size()) - 1; k >= 0; --k) v = v * x + poly[k];
  return v;
}

// Divides by (x - root); the remainder is known to vanish.
QVec deflate(const QVec& poly, const Rat& root) {
  int d = int(poly.size()) - 1;
  QVec q(d, rat(0));
  Rat carry = poly[d];
  for (int k = d - 1; k >= 0; --k) {
    q[k] = carry;
    carry = poly[k] + root * carry;
  }
  return q;
}

}  // namespace

std::optional<std::vector<Rat>> rational_roots(const QVec& poly) {
  QVec p = poly;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) return std::nullopt;

  std::vector<Rat> roots;
  while (p.size() > 1 && p[0] == 0) {
    roots.push_back(rat(0));
    p.erase(p.begin());
  }

  while (p.size() > 1) {
    // Integerize for the rational root theorem.
    mpz_class den_lcm = 1;
    for (const auto& c : p) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                                    c.get_den().get_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : p) {
      Rat t = c * Rat(den_lcm);
      z.push_back(t.get_num());
    }
    auto d0 = divisors(z.front());
    auto dl = divisors(z.back());
    if (!d0 || !dl) return std::nullopt;

    std::set<Rat> candidates;
    for (const auto& pp : *d0)
      for (const auto& qq : *dl) {
        Rat c(pp, qq);
        c.canonicalize();
        candidates.insert(c);
        candidates.insert(-c);
      }

    bool found = false;
    for (const auto& c : candidates) {
      if (eval_poly(p, c) == 0) {
        // Exhaust the multiplicity of this root before re-enumerating.
        do {
          roots.push_back(c);
          p = deflate(p, c);
        } while (p.size() > 1 && eval_poly(p, c) == 0);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return roots;
}

namespace {

// Matrix of a linear operator restricted to an invariant subspace, in the
// subspace's own basis.
QMatrix restrict_op(const QMatrix& op, const Subspace& s) {
  QMatrix cols = QMatrix::from_rows(s.basis(), s.ambient()).transpose();
  QMatrix m(s.dim(), s.dim());
  for (int j = 0; j < s.dim(); ++j) {
    auto c = solve(cols, mul(op, s.basis()[j]));
    if (!c) throw error("realization not split-adapted: eigenspace not invariant");
    for (int i = 0; i < s.dim(); ++i) m.at(i, j) = (*c)[i];
  }
  return m;
}

Subspace embed(const Subspace& s, const std::vector<QVec>& local) {
  std::vector<QVec> out;
  for (const auto& v : local) {
    QVec x(s.ambient(), rat(0));
    for (int i = 0; i < s.dim(); ++i)
      if (v[i] != 0) x = add(x, scale(s.basis()[i], v[i]));
    out.push_back(x);
  }
  return Subspace::span(s.ambient(), out);
}

}  // namespace

bool RootDatum::is_positive(int root_index) const {
  return std::binary_search(positive.begin(), positive.end(), root_index);
}

QVec RootDatum::a_coords(const QVec& x) const {
  QMatrix cols = QMatrix::from_rows(cartan.basis(), cartan.ambient()).transpose();
  auto c = solve(cols, x);
  if (!c || mul(cols, *c) != x)
    throw error("a_coords: vector outside the Cartan subspace");
  return *c;
}

Rat RootDatum::eval(const QVec& weight, const QVec& x) const {
  return dot(weight, a_coords(x));
}

int RootDatum::index_of(const QVec& weight) const {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i].weight == weight) return int(i);
  return -1;
}

RootDatum root_datum(const LieAlgebra& g, const Subspace& a,
                     const std::optional<QVec>& seed) {
  if (a.ambient() != g.dim()) throw error("root_datum: Cartan ambient mismatch");
  for (const auto& v : a.basis()) {
    if (!is_zero(add(g.theta(v), v)))
      throw error("root_datum: a must lie in the -1 theta eigenspace");
    for (const auto& w : a.basis())
      if (!is_zero(g.bracket(v, w))) throw error("root_datum: a must be abelian");
  }

  RootDatum rd;
  rd.g = &g;
  rd.cartan = a;

  // Simultaneous refinement into joint ad(a) eigenspaces.
  std::vector<std::pair<QVec, Subspace>> spaces;
  spaces.push_back({QVec{}, Subspace::full(g.dim())});
  for (const auto& h : a.basis()) {
    QMatrix adh = g.ad(h);
    std::vector<std::pair<QVec, Subspace>> next;
    for (const auto& [w, s] : spaces) {
      QMatrix m = restrict_op(adh, s);
      auto eig = rational_roots(char_poly(m));
      if (!eig)
        throw error("realization not split-adapted: ad(a) has irrational eigenvalues");
      std::map<Rat, int> mult;
      for (const auto& c : *eig) mult[c] += 1;
      int total = 0;
      for (const auto& [c, k] : mult) {
        Subspace es = embed(s, kernel_basis(m - c * QMatrix::identity(s.dim())));
        if (es.dim() != k)
          throw error("realization not split-adapted: ad(a) not diagonalizable");
        total += es.dim();
        QVec wext = w;
        wext.push_back(c);
        next.push_back({wext, es});
      }
      if (total != s.dim())
        throw error("realization not split-adapted: ad(a) not diagonalizable");
    }
    spaces = std::move(next);
  }

  rd.zero_space = Subspace::zero(g.dim());
  for (auto& [w, s] : spaces) {
    if (is_zero(w))
      rd.zero_space = s;
    else
      rd.roots.push_back({w, s});
  }
  std::sort(rd.roots.begin(), rd.roots.end(),
            [](const WeightSpace& x, const WeightSpace& y) {
              return lex_less(x.weight, y.weight);
            });

  rd.m_space = intersect(rd.zero_space, g.theta_eigenspace(1));
  if (intersect(rd.zero_space, g.theta_eigenspace(-1)) != a)
    throw error("root_datum: a not maximal");

  for (const auto& r : rd.roots) {
    QVec neg = scale(r.weight, rat(-1));
    int j = rd.index_of(neg);
    if (j < 0) throw error("root_datum: roots do not come in opposite pairs");
    for (const auto& v : r.space.basis())
      if (!rd.roots[j].space.contains(g.theta(v)))
        throw error("root_datum: theta does not pair opposite root spaces");
  }

  int r = a.dim();
  QVec sv;
  if (seed) {
    if (int(seed->size()) != r) throw error("root_datum: seed length mismatch");
    sv = *seed;
    for (const auto& rt : rd.roots)
      if (dot(rt.weight, sv) == 0)
        throw error("root_datum: seed covector vanishes on a root");
  } else {
    for (long t = 1;; ++t) {
      if (t > 1000) throw error("root_datum: no generic seed found");
      sv.assign(r, rat(1));
      for (int i = 1; i < r; ++i) sv[i] = sv[i - 1] * rat(t);
      bool ok = true;
      for (const auto& rt : rd.roots)
        if (dot(rt.weight, sv) == 0) { ok = false; break; }
      if (ok) break;
    }
  }

  for (size_t i = 0; i < rd.roots.size(); ++i)
    if (dot(rd.roots[i].weight, sv) > 0) rd.positive.push_back(int(i));

  for (int i : rd.positive) {
    bool decomposable = false;
    for (int j : rd.positive) {
      for (int k : rd.positive) {
        if (add(rd.roots[j].weight, rd.roots[k].weight) == rd.roots[i].weight) {
          decomposable = true;
          break;
        }
      }
      if (decomposable) break;
    }
    if (!decomposable) rd.simple.push_back(i);
  }

  // Every positive root must be a nonnegative integer combination of simples.
  if (!rd.positive.empty()) {
    std::vector<QVec> srows;
    for (int i : rd.simple) srows.push_back(rd.roots[i].weight);
    QMatrix scols = QMatrix::from_rows(srows, r).transpose();
    for (int i : rd.positive) {
      auto c = solve(scols, rd.roots[i].weight);
      if (!c || mul(scols, *c) != rd.roots[i].weight)
        throw error("root_datum: positive system is not simply generated");
      for (const auto& x : *c)
        if (x < 0 || x.get_den() != 1)
          throw error("root_datum: positive system is not simply generated");
    }
  }
  return rd;
}

std::vector<RootDatum> weyl_twists(const RootDatum& rd) {
  if (rd.roots.empty()) return {rd};
  const LieAlgebra& g = *rd.g;
  int r = rd.cartan.dim();
  int nroots = int(rd.roots.size());

  // Gram matrix of the trace form on a, and the induced pairing B^{-1} on
  // covectors, which drives the reflections.
  QMatrix b(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      b.at(i, j) = dot(rd.cartan.basis()[i], mul(g.gram(), rd.cartan.basis()[j]));
  QMatrix binv(r, r);
  for (int j = 0; j < r; ++j) {
    QVec e(r, rat(0));
    e[j] = rat(1);
    auto c = solve(b, e);
    if (!c) throw error("weyl_twists: degenerate trace form on a");
    for (int i = 0; i < r; ++i) binv.at(i, j) = (*c)[i];
  }
  auto pair = [&](const QVec& x, const QVec& y) { return dot(x, mul(binv, y)); };

  std::vector<std::vector<int>> gens;
  for (int s : rd.simple) {
    const QVec& alpha = rd.roots[s].weight;
    Rat aa = pair(alpha, alpha);
    std::vector<int> perm(nroots);
    for (int i = 0; i < nroots; ++i) {
      const QVec& beta = rd.roots[i].weight;
      QVec img = sub(beta, scale(alpha, rat(2) * pair(beta, alpha) / aa));
      int j = rd.index_of(img);
      if (j < 0) throw error("weyl_twists: reflection does not permute the roots");
      perm[i] = j;
    }
    gens.push_back(perm);
  }

  std::vector<int> id(nroots);
  for (int i = 0; i < nroots; ++i) id[i] = i;

  std::set<std::vector<int>> seen{id};
  std::queue<std::pair<std::vector<int>, std::vector<int>>> bfs;  // perm, word
  bfs.push({id, {}});
  std::vector<std::pair<std::vector<int>, std::vector<int>>> elements;

  while (!bfs.empty()) {
    auto [perm, word] = bfs.front();
    bfs.pop();
    elements.push_back({perm, word});
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      std::vector<int> np(nroots);
      for (int i = 0; i < nroots; ++i) np[i] = gens[gi][perm[i]];
      if (seen.insert(np).second) {
        if (seen.size() > 10000000)
          throw error("weyl_twists: enumeration exceeded safety bound");
        auto nw = word;
        nw.push_back(int(gi));
        bfs.push({np, nw});
      }
    }
  }

  std::vector<RootDatum> out;
  for (const auto& [perm, word] : elements) {
    RootDatum t = rd;
    t.twist_word = word;
    t.positive.clear();
    for (int i : rd.positive) t.positive.push_back(perm[i]);
    std::sort(t.positive.begin(), t.positive.end());
    t.simple.clear();
    for (int i : rd.simple) t.simple.push_back(perm[i]);
    std::sort(t.simple.begin(), t.simple.end());
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace sphex
