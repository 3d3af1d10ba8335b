#pragma once

#include "sphex/subspace.hpp"

namespace sphex {

/// Closed convex polyhedral cone in Q^n carrying both descriptions at once:
///   V-form: cone(rays) + span(lineality)
///   H-form: {x : f.x <= 0 for facets f, s.x = 0 for span normals s}
/// Both sides are canonical (primitive integer vectors, lex sorted, no
/// redundant element), so equal cones have identical representations.
class Cone {
 public:
  Cone() = default;

  static Cone from_inequalities(int ambient, const std::vector<QVec>& ineqs);
  static Cone from_generators(int ambient, const std::vector<QVec>& gens);

  int ambient() const { return ambient_; }

  const std::vector<QVec>& rays() const { return rays_; }
  const std::vector<QVec>& lineality() const { return lin_; }
  const std::vector<QVec>& facets() const { return facets_; }
  const std::vector<QVec>& span_normals() const { return span_normals_; }

  /// rays plus both signs of the lineality basis.
  std::vector<QVec> generators() const;
  /// facets plus both signs of the span normals.
  std::vector<QVec> inequalities() const;

  /// Polar dual {y : y.x <= 0 for all x in the cone}.
  Cone dual() const;

  /// Largest linear subspace contained in the cone (c intersect -c).
  Subspace edge() const;

  bool contains(const QVec& x) const;
  bool contains(const Cone& other) const;
  bool equals(const Cone& other) const;

  /// Image under the linear map given by an (m x ambient) matrix.
  Cone linear_image(const QMatrix& map) const;

  /// Dimension of the linear span of the cone.
  int dim() const;

  struct InteriorPoint {
    QVec point;
    bool full_dimensional;
  };
  /// Point in the relative interior (sum of the reduced generators, one sign
  /// per lineality basis vector); absent only for the zero cone.
  std::optional<InteriorPoint> interior_point() const;

  bool operator==(const Cone& o) const = default;

 private:
  int ambient_ = 0;
  std::vector<QVec> rays_, lin_;
  std::vector<QVec> facets_, span_normals_;
};

}  // namespace sphex
