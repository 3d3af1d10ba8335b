#include "sphex/lie_algebra.hpp"

namespace sphex {

namespace {

QVec flatten(const QMatrix& m) {
  QVec v;
  v.reserve(size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

QMatrix commutator(const QMatrix& x, const QMatrix& y) { return x * y - y * x; }

}  // namespace

LieAlgebra LieAlgebra::build(const std::vector<QMatrix>& basis) {
  if (basis.empty()) throw error("lie algebra: empty basis");
  LieAlgebra g;
  g.n_ = basis[0].rows();
  g.dim_ = int(basis.size());
  for (const auto& b : basis) {
    if (b.rows() != b.cols()) throw error("lie algebra: basis matrix not square");
    if (b.rows() != g.n_) throw error("lie algebra: basis matrices of mixed sizes");
  }
  g.basis_ = basis;

  std::vector<QVec> flat_rows;
  for (const auto& b : basis) flat_rows.push_back(flatten(b));
  QMatrix by_rows = QMatrix::from_rows(flat_rows, g.n_ * g.n_);
  if (rank(by_rows) != g.dim_) throw error("lie algebra: basis not linearly independent");
  g.flat_ = by_rows.transpose();

  auto coords = [&](const QMatrix& m, const char* what) {
    auto c = solve(g.flat_, flatten(m));
    if (!c) throw error(std::string("lie algebra: ") + what);
    return *c;
  };

  g.table_.assign(g.dim_, std::vector<QVec>(g.dim_));
  for (int i = 0; i < g.dim_; ++i)
    for (int j = 0; j < g.dim_; ++j)
      g.table_[i][j] = coords(commutator(basis[i], basis[j]),
                              "not closed under bracket");

  // theta(X) = -X^T expressed on coordinates; involutivity is automatic once
  // each image lands back in the span.
  std::vector<QVec> theta_cols(g.dim_);
  for (int i = 0; i < g.dim_; ++i)
    theta_cols[i] = coords(rat(-1) * basis[i].transpose(), "basis not theta-stable");
  g.theta_ = QMatrix::from_rows(theta_cols, g.dim_).transpose();

  g.gram_ = QMatrix(g.dim_, g.dim_);
  for (int i = 0; i < g.dim_; ++i)
    for (int j = i; j < g.dim_; ++j) {
      Rat t = (basis[i] * basis[j].transpose()).trace();
      g.gram_.at(i, j) = t;
      g.gram_.at(j, i) = t;
    }

  for (int i = 0; i < g.dim_; ++i)
    for (int j = i + 1; j < g.dim_; ++j)
      for (int k = j + 1; k < g.dim_; ++k) {
        QVec ei(g.dim_, rat(0)), ej(g.dim_, rat(0)), ek(g.dim_, rat(0));
        ei[i] = rat(1); ej[j] = rat(1); ek[k] = rat(1);
        QVec s = add(add(g.bracket(ei, g.table_[j][k]), g.bracket(ej, g.table_[k][i])),
                     g.bracket(ek, g.table_[i][j]));
        if (!is_zero(s)) throw error("lie algebra: Jacobi identity fails");
      }
  return g;
}

QVec LieAlgebra::bracket(const QVec& x, const QVec& y) const {
  QVec out(dim_, rat(0));
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      Rat f = x[i] * y[j];
      const QVec& c = table_[i][j];
      for (int k = 0; k < dim_; ++k)
        if (c[k] != 0) out[k] += f * c[k];
    }
  }
  return out;
}

QMatrix LieAlgebra::ad(const QVec& x) const {
  QMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    QVec col(dim_, rat(0));
    for (int i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      const QVec& c = table_[i][j];
      for (int k = 0; k < dim_; ++k)
        if (c[k] != 0) col[k] += x[i] * c[k];
    }
    for (int k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

QVec LieAlgebra::theta(const QVec& x) const { return mul(theta_, x); }

std::optional<QVec> LieAlgebra::coords_of(const QMatrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) return std::nullopt;
  return solve(flat_, flatten(m));
}

QMatrix LieAlgebra::matrix_of(const QVec& coords) const {
  if (int(coords.size()) != dim_) throw error("matrix_of: wrong coordinate length");
  QMatrix m(n_, n_);
  for (int b = 0; b < dim_; ++b) {
    if (coords[b] == 0) continue;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m.at(i, j) += coords[b] * basis_[b].at(i, j);
  }
  return m;
}

Subspace LieAlgebra::theta_eigenspace(int sign) const {
  if (sign != 1 && sign != -1) throw error("theta_eigenspace: sign must be +-1");
  QMatrix m = theta_ - rat(sign) * QMatrix::identity(dim_);
  return Subspace::span(dim_, kernel_basis(m));
}

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
  const auto& b = s.basis();
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j)
      if (!s.contains(bracket(b[i], b[j]))) return false;
  return true;
}

Subspace LieAlgebra::derived(const Subspace& s) const {
  std::vector<QVec> gens;
  const auto& b = s.basis();
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j) gens.push_back(bracket(b[i], b[j]));
  return Subspace::span(dim_, gens);
}

Subspace LieAlgebra::centralizer_in(const Subspace& within, const Subspace& of) const {
  if (of.is_zero()) return within;
  std::vector<QVec> rows;
  for (const auto& y : of.basis()) {
    QMatrix ady = ad(y);
    // [x, y] = -ad(y) x, so the condition is ad(y) x = 0.
    for (int r = 0; r < dim_; ++r) rows.push_back(ady.row(r));
  }
  Subspace ker = Subspace::span(dim_, kernel_basis(QMatrix::from_rows(rows, dim_)));
  return intersect(within, ker);
}

Subspace LieAlgebra::normalizer_of(const Subspace& h) const {
  if (h.is_zero()) return Subspace::full(dim_);
  std::vector<QVec> rows;
  for (const auto& y : h.basis()) {
    // x maps to the residual of [x, y] modulo h; linear in x.
    std::vector<QVec> cols;
    for (int j = 0; j < dim_; ++j) {
      QVec ej(dim_, rat(0));
      ej[j] = rat(1);
      cols.push_back(h.reduce(bracket(ej, y)));
    }
    for (int r = 0; r < dim_; ++r) {
      QVec row(dim_);
      for (int j = 0; j < dim_; ++j) row[j] = cols[j][r];
      rows.push_back(row);
    }
  }
  return Subspace::span(dim_, kernel_basis(QMatrix::from_rows(rows, dim_)));
}

Subspace LieAlgebra::ideal_closure(const Subspace& seed, const Subspace& ambient) const {
  Subspace cur = seed;
  for (;;) {
    std::vector<QVec> gens = cur.basis();
    for (const auto& a : ambient.basis())
      for (const auto& x : cur.basis()) gens.push_back(bracket(a, x));
    Subspace next = Subspace::span(dim_, gens);
    if (next.dim() == cur.dim()) return next;
    cur = next;
  }
}

}  // namespace sphex
