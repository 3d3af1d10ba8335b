#pragma once

#include "sphex/lie_algebra.hpp"

namespace sphex {

/// Monic characteristic polynomial of a square matrix, exact, returned as
/// coefficients c[0..m] with c[m] = 1 and p(t) = sum c[k] t^k.
QVec char_poly(const QMatrix& m);

/// All rational roots of the polynomial, with multiplicity, found by the
/// rational root theorem plus deflation. Returns nullopt when the remaining
/// factor has positive degree but no rational root, or when coefficient
/// growth exceeds the divisor search budget.
std::optional<std::vector<Rat>> rational_roots(const QVec& poly);

struct WeightSpace {
  QVec weight;     // values on the Cartan basis
  Subspace space;  // joint eigenspace inside g
};

/// Restricted root space decomposition of g under a split Cartan subspace a:
/// the joint eigenspaces of ad(a), the nonzero weights (restricted roots), a
/// choice of positive system, and the simple roots it determines.
struct RootDatum {
  const LieAlgebra* g = nullptr;
  Subspace cartan;                 // a
  std::vector<WeightSpace> roots;  // nonzero weights, sorted by weight
  Subspace zero_space;             // centralizer of a in g
  Subspace m_space;                // compact part of the centralizer
  std::vector<int> positive;       // indices into roots, sorted
  std::vector<int> simple;         // indices into roots, sorted
  std::vector<int> twist_word;     // simple reflections producing this system

  bool is_positive(int root_index) const;
  /// Coordinates of a Cartan element in the Cartan basis.
  QVec a_coords(const QVec& x) const;
  /// Value of a weight (given on the Cartan basis) at a Cartan element.
  Rat eval(const QVec& weight, const QVec& x) const;
  int index_of(const QVec& weight) const;  // -1 when absent
  int multiplicity(int root_index) const { return roots[root_index].space.dim(); }
};

/// Decomposes g under a. The subspace a must lie in the -1 theta eigenspace,
/// be abelian, be maximal with these properties, and act with rational
/// eigenvalues. The positive system is cut out by the seed covector (no root
/// may vanish on it); when absent, the first generic vector (1, t, t^2, ...)
/// with t = 1, 2, ... is used.
RootDatum root_datum(const LieAlgebra& g, const Subspace& a,
                     const std::optional<QVec>& seed = std::nullopt);

/// All positive systems for the root datum, one per Weyl group element,
/// enumerated by word length. The first entry is the input datum itself.
std::vector<RootDatum> weyl_twists(const RootDatum& rd);

}  // namespace sphex
