#pragma once

#include "sphex/root_datum.hpp"

namespace sphex {

/// Standard parabolic subalgebra q = l + u attached to a set of marked simple
/// roots, with the pieces of its Levi decomposition split off exactly. Owns a
/// copy of the root datum so the result stays valid on its own.
struct Parabolic {
  RootDatum rd;
  std::vector<int> marked;  // indices into rd.simple, sorted

  Subspace q;      // l + u
  Subspace l;      // Levi: zero space plus root spaces supported on marked
  Subspace u;      // nilradical: remaining positive root spaces
  Subspace u_bar;  // theta(u)
  Subspace l_der;  // [l, l]
  Subspace l_n;    // noncompact part of [l, l]: ideal closure of [l,l] cap s
  Subspace l_c;    // centralizer of l_n in [l, l]
  Subspace z_l;    // center of l
  Subspace z_l_np; // noncompact part of the center (inside the Cartan)
  Subspace z_l_cp; // compact part of the center

  /// Positive roots living in u, with multiplicities, sorted by weight.
  std::vector<std::pair<QVec, int>> sigma_u;
};

/// Minimal parabolic: zero space plus all positive root spaces.
Subspace minimal_parabolic(const RootDatum& rd);

/// Builds the standard parabolic for the marked simple roots (indices into
/// rd.simple). Validates the Levi splitting l = z(l) + l_n + l_c.
Parabolic standard_parabolic(const RootDatum& rd, const std::vector<int>& marked);

}  // namespace sphex
