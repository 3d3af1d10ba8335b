#pragma once

#include "sphex/cone.hpp"
#include "sphex/spherical.hpp"

namespace sphex {

/// Coordinates of an ambient vector lying in a_z, in the a_z basis.
QVec az_coords(const LocalStructure& ls, const QVec& x);

/// Restriction of a weight (values on the Cartan basis) to a_z, as values on
/// the a_z basis.
QVec restrict_to_az(const LocalStructure& ls, const QVec& weight);

/// Matrix of the orthogonal projection a -> a_z, from Cartan coordinates to
/// a_z coordinates.
QMatrix a_to_az_matrix(const LocalStructure& ls);

/// One lift of an opposite root vector into h across the transverse
/// splitting: lift = x_minus + (piece in d_h_perp) + (pieces in u).
struct GraphMapTerm {
  int root_index;         // positive root alpha whose opposite this lifts
  QVec x_minus;           // basis vector of the root space at -alpha
  QVec lift;              // the unique element of h congruent to x_minus
  QVec d_part;            // component of the lift in d_h_perp
  std::vector<int> beta;  // roots of u with a nonzero component in the lift
};
std::vector<GraphMapTerm> graph_map(const LocalStructure& ls, const Subspace& h);

/// Restricted weights spanning the compression monoid: alpha when the lift
/// has a d_h_perp part, alpha + beta for each u component. Deduplicated,
/// zeros dropped, sorted.
std::vector<QVec> monoid_generators(const LocalStructure& ls, const Subspace& h);

/// The compression cone {X in a_z : mu(X) <= 0 for all monoid generators},
/// its sharpness, and the wavefront comparison against the image of the
/// negative chamber under the projection a -> a_z.
struct CompressionResult {
  std::vector<QVec> monoid;
  Cone cone;           // in a_z coordinates
  bool sharp = false;  // edge is trivial
  Cone a_minus;        // negative chamber, in Cartan coordinates
  Cone a_minus_image;  // its projection, in a_z coordinates
  bool wavefront = false;
};
CompressionResult compression_cone(const LocalStructure& ls, const Subspace& h);

/// {x : w(x) <= 0 for every nonzero weight}.
Cone support_cone(int ambient, const std::vector<QVec>& weights);

/// Independent check through the wedge embedding: the a_z weights of the
/// nonvanishing Pluecker coordinates of h, shifted so the coordinate of the
/// limiting subalgebra sits at zero. Their support cone must reproduce the
/// compression cone.
struct WedgeSupport {
  QVec mu0;                   // weight of the limit coordinate, on a_z
  std::vector<QVec> support;  // shifted weights, sorted, including zero
  Cone cone;
};
WedgeSupport plucker_support(const LocalStructure& ls, const Subspace& h);

}  // namespace sphex
