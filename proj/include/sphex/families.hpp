#pragma once

#include "sphex/lie_algebra.hpp"

namespace sphex {

/// A Lie algebra together with a built-in maximally split Cartan subspace and
/// a display name.
struct RealizedAlgebra {
  LieAlgebra g;
  Subspace cartan;  // maximal abelian subspace of the -1 theta eigenspace
  std::string name;
};

/// Traceless n x n matrices. Basis order: E_ii - E_{i+1,i+1} for i < n, then
/// strictly upper entries E_ij row by row, then strictly lower entries.
RealizedAlgebra sl_algebra(int n);

/// Matrices X with X^T J + J X = 0 for J = diag(I_p, -I_q). Basis order:
/// rotations E_ij - E_ji inside the first block, then inside the second,
/// then boosts E_ij + E_ji across the blocks.
RealizedAlgebra so_algebra(int p, int q);

/// Matrices X with X^T J + J X = 0 for the standard symplectic form on
/// R^{2n}; pass the full matrix size 2n.
RealizedAlgebra sp_algebra(int size);

/// Block diagonal sum; the Cartan is the sum of the factor Cartans.
RealizedAlgebra product_algebra(const std::vector<RealizedAlgebra>& factors);

}  // namespace sphex
