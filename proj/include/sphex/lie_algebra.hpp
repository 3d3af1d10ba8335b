#pragma once

#include "sphex/subspace.hpp"

namespace sphex {

/// Real reductive Lie algebra realized by an explicit basis of rational n x n
/// matrices, closed under commutator and under the Cartan involution
/// theta(X) = -X^T. Elements are coordinate vectors in the given basis; the
/// trace form <X,Y> = Tr(X Y^T) is the reference inner product.
class LieAlgebra {
 public:
  /// Validates: square matrices of one size, linearly independent, bracket
  /// closure, theta stability, Jacobi identity of the structure table.
  static LieAlgebra build(const std::vector<QMatrix>& basis);

  int dim() const { return dim_; }
  int matrix_size() const { return n_; }
  const std::vector<QMatrix>& basis() const { return basis_; }

  QVec bracket(const QVec& x, const QVec& y) const;
  /// Matrix of ad(x) acting on coordinates.
  QMatrix ad(const QVec& x) const;
  QVec theta(const QVec& x) const;
  const QMatrix& theta_matrix() const { return theta_; }
  /// Gram matrix of the trace form in the chosen basis.
  const QMatrix& gram() const { return gram_; }

  std::optional<QVec> coords_of(const QMatrix& m) const;
  QMatrix matrix_of(const QVec& coords) const;

  /// +1 eigenspace of theta (maximal compact part) or -1 eigenspace.
  Subspace theta_eigenspace(int sign) const;

  bool is_subalgebra(const Subspace& s) const;
  /// Span of all brackets of pairs from s.
  Subspace derived(const Subspace& s) const;
  /// {x in within : [x, y] = 0 for all y in of}.
  Subspace centralizer_in(const Subspace& within, const Subspace& of) const;
  /// {x : [x, h] lies in h}.
  Subspace normalizer_of(const Subspace& h) const;
  /// Smallest subspace containing seed and closed under bracket with ambient.
  Subspace ideal_closure(const Subspace& seed, const Subspace& ambient) const;

 private:
  int n_ = 0, dim_ = 0;
  std::vector<QMatrix> basis_;
  std::vector<std::vector<QVec>> table_;  // table_[i][j] = coords of [b_i, b_j]
  QMatrix theta_, gram_, flat_;           // flat_: n^2 x dim, columns are basis matrices
};

}  // namespace sphex
