#pragma once

#include "sphex/parabolic.hpp"

namespace sphex {

/// A positive system whose minimal parabolic meets the subalgebra
/// transversally: p + h = g, the open orbit condition at the base point.
struct OpenOrbit {
  RootDatum rd;
  Subspace p_min;
  Subspace h;
};

/// Searches the Weyl twists of the positive system for one whose minimal
/// parabolic is transverse to h. Validates that h is a subalgebra.
OpenOrbit find_open_parabolic(const LieAlgebra& g, const Subspace& a,
                              const Subspace& h,
                              const std::optional<QVec>& seed = std::nullopt);

/// The parabolic q = l + u adapted to the pair, and the exact transverse
/// splitting g = h + a_z + m_z + u it induces. a_z realizes the rank
/// directions of the homogeneous space; the splitting is what every later
/// computation (cone, oracle, degeneration) works in.
struct LocalStructure {
  Parabolic q;
  Subspace l_h;       // q cap h; sits inside the Levi and contains l_n
  Subspace a_h;       // orth projection of l_h onto the split center of l
  Subspace a_z;       // orth complement of a_h in the split center
  Subspace d;         // z(l) + compact part of [l, l]
  Subspace d_h;       // l_h cap d
  Subspace d_h_perp;  // orth complement of d_h in d
  Subspace m_z;       // orth complement of a_z in d_h_perp
  int rank = 0;       // dim a_z
};
LocalStructure local_structure(const OpenOrbit& oo);

/// Normalizer of h in g and the split directions it adds beyond h. The
/// quotient N(H)/H is compact exactly when no split direction is added.
struct NormalizerSplit {
  Subspace normalizer;
  Subspace a_tilde;  // orth projection onto the Cartan of the added part
  bool compact_quotient = false;
};
NormalizerSplit normalizer_split(const OpenOrbit& oo);

/// Degeneration of h inside the Grassmannian: the opposite nilradical plus
/// the Levi part of h. Validated to be a subalgebra of the same dimension.
Subspace limiting_subalgebra(const LocalStructure& ls, const Subspace& h);

}  // namespace sphex
