#pragma once

#include <cstdint>

#include "sphex/compression.hpp"

namespace sphex {

/// Thresholds and schedule cap for the floating point degeneration runs.
/// Tuned for double precision with the direction rescaled to unit gram norm.
struct DegenerationLimits {
  double converge_tol = 1e-8;
  double diverge_tol = 1e-3;
  double t_max = 50.0;
};

enum class Verdict { converged, diverged, inconclusive };

const char* to_string(Verdict v);

/// Distance curve of e^{t ad x} h against the limiting subalgebra, measured
/// on the Grassmannian by the Frobenius norm of the difference of the two
/// orthogonal projectors (values in [0, sqrt(2 dim h)]).
struct Trajectory {
  QVec direction;  // exact input direction; time runs along direction/|direction|
  std::vector<double> times;
  std::vector<double> distances;
  double max_residual = 0.0;  // worst orthonormality defect across the curve
  Verdict verdict = Verdict::inconclusive;

  double final_distance() const { return distances.empty() ? 0.0 : distances.back(); }
};

/// Flows h along the one-parameter group of ad(x) and records the distance
/// to the limiting subalgebra at integer times up to t_max. The direction
/// must be a nonzero element of a_z; the flow acts weight-wise on an exact
/// eigenbasis of ad(x), with each deformed basis vector renormalized before
/// orthonormalization so no exponential overflows.
///
/// Verdict: converged when the final distance is below converge_tol and the
/// last quarter of the curve never increases; diverged when the whole last
/// quarter stays above diverge_tol; inconclusive otherwise.
Trajectory degenerate(const LocalStructure& ls, const Subspace& h, const QVec& x,
                      const DegenerationLimits& limits = {});

struct SampledTrajectory {
  Trajectory trajectory;
  bool passed = false;
};

/// Numerical cross-check of a compression cone given in a_z coordinates:
/// directions sampled from the interior (the canonical interior point plus
/// `samples` random rational perturbations, kept strictly interior by exact
/// inequality checks) must converge and sit below 1e-6 on the last fifth of
/// the schedule; integer directions violating some facet strictly must
/// diverge and stay above diverge_tol on the last three fifths. When the
/// cone has no facets there is nothing to violate and the exterior list is
/// empty. Deterministic for a fixed seed.
struct ConeCheck {
  std::vector<SampledTrajectory> interior;
  std::vector<SampledTrajectory> exterior;
  bool passed = false;
};

ConeCheck verify_cone(const LocalStructure& ls, const Subspace& h, const Cone& cone,
                      int samples, std::uint64_t seed,
                      const DegenerationLimits& limits = {});

}  // namespace sphex
