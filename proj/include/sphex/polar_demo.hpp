#pragma once

#include <cstdint>

namespace sphex {

/// One point of the one sheeted hyperboloid x^2 + y^2 - z^2 = 1.
struct HyperboloidPoint {
  double x = 0, y = 0, z = 0;
};

/// Factorization of a point as rotation * (cosh s, 0, sinh s) with s <= 0,
/// optionally composed with the z-sign flip. angle is the rotation in the
/// (x, y) plane; residual is the euclidean distance between the input and
/// the rebuilt point.
struct PolarFactors {
  double angle = 0;
  double s = 0;
  bool flipped = false;
  double residual = 0;
  bool decomposed = false;
};

PolarFactors polar_decompose(const HyperboloidPoint& p, bool with_flip);

/// Draws seeded points on the hyperboloid by rejection from a box and tries
/// to decompose each one. Without the flip the points on the upper half are
/// stuck, so coverage stays below one.
struct PolarSummary {
  int samples = 0;
  int decomposed = 0;
  int flipped = 0;
  double worst_residual = 0;  // over the decomposed points
  double coverage() const { return samples ? double(decomposed) / samples : 0.0; }
};

PolarSummary polar_demo(int samples, std::uint64_t seed, bool with_flip);

}  // namespace sphex
