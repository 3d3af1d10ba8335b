#pragma once

#include <json.hpp>

#include "sphex/grasslimit.hpp"
#include "sphex/space_io.hpp"

namespace sphex {

/// Everything the pipeline establishes about one space, ready for emission.
/// Weight vectors are values on the Cartan basis; monoid generators and mu0
/// are values on the a_z basis.
struct AnalysisReport {
  std::string name;
  std::string algebra_name;
  std::vector<int> twist_word;           // positive system with the open orbit
  std::vector<QVec> adapted_weights;     // simple roots marked for the adapted parabolic
  int dim_g = 0, dim_h = 0;
  int dim_q = 0, dim_l = 0, dim_u = 0, dim_l_n = 0;
  int dim_a_h = 0, dim_a_z = 0, dim_m_z = 0, dim_h_lim = 0;
  int rank = 0;
  int a_tilde_dim = 0;
  bool compact_quotient = false;
  std::vector<QVec> monoid;
  Cone cone;  // compression cone in a_z coordinates
  int edge_dim = 0;
  bool sharp = false;
  bool wavefront = false;
  bool oracle_agrees = false;
  QVec oracle_mu0;
  int oracle_support_size = 0;
  bool numeric_ran = false;
  int interior_samples = 0, exterior_samples = 0;
  bool numeric_passed = true;
  double worst_residual = 0.0;
  long timing_ms = 0;

  /// True when every cross-check that ran came out clean.
  bool all_checks_passed() const { return oracle_agrees && numeric_passed; }
};

/// Full pipeline: open orbit, adapted parabolic and splitting, normalizer,
/// compression cone, wedge support oracle, and (unless skipped) the sampled
/// degeneration check. Errors from any step are rethrown with the stage name
/// prefixed.
AnalysisReport analyze(const RealizedSpace& space, const std::string& name,
                       const AnalyzeOptions& options = {});

inline AnalysisReport analyze(const SpaceDescription& desc) {
  return analyze(realize(desc), desc.name, desc.options);
}

nlohmann::ordered_json structured_report(const AnalysisReport& r);
std::string text_report(const AnalysisReport& r);

}  // namespace sphex
