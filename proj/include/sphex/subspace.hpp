#pragma once

#include "sphex/linalg.hpp"

namespace sphex {

/// Linear subspace of Q^n stored by its unique RREF basis, so equality of
/// subspaces is equality of representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}

  static Subspace span(int ambient, const std::vector<QVec>& vectors);
  static Subspace zero(int ambient) { return Subspace(ambient); }
  static Subspace full(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<QVec>& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;

  /// Residual of v after elimination against the RREF basis; zero iff v lies
  /// in the subspace.
  QVec reduce(QVec v) const;

  bool operator==(const Subspace& o) const = default;

 private:
  int ambient_ = 0;
  std::vector<QVec> basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// {x : gram(x, u) = 0 for all u in the subspace}; gram must be a symmetric
/// square matrix of the ambient size.
Subspace orth_complement(const Subspace& u, const QMatrix& gram);

/// Component of x in `onto` along `along`; requires onto + along to be a
/// direct-sum decomposition of the ambient space.
QVec project(const QVec& x, const Subspace& onto, const Subspace& along);

/// Image of a subspace under the gram-orthogonal projection onto `onto`.
Subspace orth_project(const Subspace& source, const Subspace& onto, const QMatrix& gram);
QVec orth_project(const QVec& x, const Subspace& onto, const QMatrix& gram);

}  // namespace sphex
