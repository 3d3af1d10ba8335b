#include "sphex/polar_demo.hpp"

#include <cmath>
#include <random>

#include "sphex/rational.hpp"

namespace sphex {

namespace {

constexpr double kResidualTol = 1e-9;

double unit_double(std::mt19937_64& eng) {
  return double(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

PolarFactors polar_decompose(const HyperboloidPoint& p, bool with_flip) {
  PolarFactors out;
  double r = std::hypot(p.x, p.y);
  out.angle = std::atan2(p.y, p.x);

  // In the rotated frame the point is (r, 0, z) and the curve
  // (cosh s, 0, sinh s), s <= 0, passes through exactly the lower half; the
  // flip swaps the sign of z and reaches the rest.
  double s = std::asinh(p.z);
  if (s > 0) {
    if (with_flip) {
      out.flipped = true;
      s = -s;
    } else {
      s = 0;  // closest admissible parameter
    }
  }
  out.s = s;

  double zr = out.flipped ? -std::sinh(s) : std::sinh(s);
  double xr = std::cosh(s);
  double cx = std::cos(out.angle) * xr;
  double cy = std::sin(out.angle) * xr;
  out.residual = std::sqrt((cx - p.x) * (cx - p.x) + (cy - p.y) * (cy - p.y) +
                           (zr - p.z) * (zr - p.z));
  out.decomposed = out.residual < kResidualTol;
  return out;
}

PolarSummary polar_demo(int samples, std::uint64_t seed, bool with_flip) {
  if (samples < 1) throw error("polar demo: need at least one sample");
  std::mt19937_64 eng(seed);
  PolarSummary out;
  out.samples = samples;
  for (int i = 0; i < samples; ++i) {
    double x, y;
    do {
      x = -3.0 + 6.0 * unit_double(eng);
      y = -3.0 + 6.0 * unit_double(eng);
    } while (x * x + y * y < 1.0);
    double z = std::sqrt(x * x + y * y - 1.0);
    if (eng() & 1) z = -z;

    PolarFactors f = polar_decompose({x, y, z}, with_flip);
    if (f.decomposed) {
      ++out.decomposed;
      out.worst_residual = std::max(out.worst_residual, f.residual);
    }
    if (f.flipped) ++out.flipped;
  }
  return out;
}

}  // namespace sphex
