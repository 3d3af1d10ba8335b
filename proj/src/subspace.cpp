#include "sphex/subspace.hpp"

namespace sphex {

Subspace Subspace::span(int ambient, const std::vector<QVec>& vectors) {
  for (const QVec& v : vectors)
    if (static_cast<int>(v.size()) != ambient) throw error("span: vector of wrong ambient size");
  Subspace s(ambient);
  if (vectors.empty()) return s;
  QMatrix r = rref(QMatrix::from_rows(vectors, ambient));
  for (int i = 0; i < r.rows(); i++) {
    QVec row = r.row(i);
    if (sphex::is_zero(row)) break;
    s.basis_.push_back(std::move(row));
  }
  return s;
}

Subspace Subspace::full(int ambient) {
  std::vector<QVec> e;
  for (int i = 0; i < ambient; i++) {
    QVec v(ambient, Rat(0));
    v[i] = 1;
    e.push_back(std::move(v));
  }
  return span(ambient, e);
}

QVec Subspace::reduce(QVec v) const {
  if (static_cast<int>(v.size()) != ambient_) throw error("reduce: wrong ambient size");
  for (const QVec& b : basis_) {
    int lead = 0;
    while (lead < ambient_ && b[lead] == 0) lead++;
    if (v[lead] != 0) {
      Rat f = v[lead];  // basis rows are RREF-normalized, pivot is 1
      for (int j = lead; j < ambient_; j++) v[j] -= f * b[j];
    }
  }
  return v;
}

bool Subspace::contains(const QVec& v) const { return sphex::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw error("contains: ambient mismatch");
  for (const QVec& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw error("sum: ambient mismatch");
  std::vector<QVec> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient(), all);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw error("intersect: ambient mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient());
  // Coefficient pairs (x, y) with x^T A = y^T B span the intersection.
  int ka = a.dim(), kb = b.dim();
  QMatrix m(a.ambient(), ka + kb);
  for (int j = 0; j < ka; j++)
    for (int i = 0; i < a.ambient(); i++) m.at(i, j) = a.basis()[j][i];
  for (int j = 0; j < kb; j++)
    for (int i = 0; i < a.ambient(); i++) m.at(i, ka + j) = -b.basis()[j][i];
  std::vector<QVec> vecs;
  for (const QVec& k : kernel_basis(m)) {
    QVec v(a.ambient(), Rat(0));
    for (int j = 0; j < ka; j++)
      if (k[j] != 0) v = add(v, scale(a.basis()[j], k[j]));
    vecs.push_back(std::move(v));
  }
  return Subspace::span(a.ambient(), vecs);
}

Subspace orth_complement(const Subspace& u, const QMatrix& gram) {
  int n = u.ambient();
  if (gram.rows() != n || gram.cols() != n) throw error("orth_complement: gram size mismatch");
  if (gram != gram.transpose()) throw error("orth_complement: gram not symmetric");
  if (u.is_zero()) return Subspace::full(n);
  QMatrix m(u.dim(), n);
  for (int i = 0; i < u.dim(); i++) m.set_row(i, mul(gram, u.basis()[i]));
  return Subspace::span(n, kernel_basis(m));
}

QVec project(const QVec& x, const Subspace& onto, const Subspace& along) {
  int n = onto.ambient();
  if (along.ambient() != n || static_cast<int>(x.size()) != n)
    throw error("project: ambient mismatch");
  if (onto.dim() + along.dim() != n) throw error("project: not a direct sum decomposition");
  QMatrix m(n, n);
  for (int j = 0; j < onto.dim(); j++)
    for (int i = 0; i < n; i++) m.at(i, j) = onto.basis()[j][i];
  for (int j = 0; j < along.dim(); j++)
    for (int i = 0; i < n; i++) m.at(i, onto.dim() + j) = along.basis()[j][i];
  auto c = solve(m, x);
  if (!c) throw error("project: not a direct sum decomposition");
  QVec p(n, Rat(0));
  for (int j = 0; j < onto.dim(); j++)
    if ((*c)[j] != 0) p = add(p, scale(onto.basis()[j], (*c)[j]));
  return p;
}

QVec orth_project(const QVec& x, const Subspace& onto, const QMatrix& gram) {
  if (onto.is_zero()) return QVec(onto.ambient(), Rat(0));
  int k = onto.dim();
  QMatrix g(k, k);
  QVec rhs(k);
  for (int i = 0; i < k; i++) {
    QVec gi = mul(gram, onto.basis()[i]);
    for (int j = 0; j < k; j++) g.at(i, j) = dot(gi, onto.basis()[j]);
    rhs[i] = dot(gi, x);
  }
  auto c = solve(g, rhs);
  if (!c) throw error("orth_project: degenerate gram on subspace");
  QVec p(onto.ambient(), Rat(0));
  for (int i = 0; i < k; i++)
    if ((*c)[i] != 0) p = add(p, scale(onto.basis()[i], (*c)[i]));
  return p;
}

Subspace orth_project(const Subspace& source, const Subspace& onto, const QMatrix& gram) {
  std::vector<QVec> images;
  for (const QVec& v : source.basis()) images.push_back(orth_project(v, onto, gram));
  return Subspace::span(onto.ambient(), images);
}

}  // namespace sphex
