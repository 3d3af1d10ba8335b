#include "sphex/analyze.hpp"

#include <chrono>
#include <sstream>

namespace sphex {

namespace {

using nlohmann::ordered_json;

template <class F>
auto stage(const char* label, F&& f) {
  try {
    return f();
  } catch (const error& e) {
    throw error(std::string(label) + " stage: " + e.what());
  }
}

ordered_json emit_qvec(const QVec& v) {
  ordered_json out = ordered_json::array();
  for (const Rat& c : v) out.push_back(rat_to_string(c));
  return out;
}

ordered_json emit_qvec_list(const std::vector<QVec>& vs) {
  ordered_json out = ordered_json::array();
  for (const QVec& v : vs) out.push_back(emit_qvec(v));
  return out;
}

/// Canonical cone vectors are primitive integers, so they print as numbers.
ordered_json emit_int_list(const std::vector<QVec>& vs) {
  ordered_json out = ordered_json::array();
  for (const QVec& v : vs) {
    ordered_json row = ordered_json::array();
    for (const Rat& c : v) row.push_back((long)c.get_num().get_si());
    out.push_back(row);
  }
  return out;
}

std::string join_vectors(const std::vector<QVec>& vs) {
  if (vs.empty()) return "(none)";
  std::ostringstream os;
  for (size_t i = 0; i < vs.size(); ++i) {
    os << (i ? " " : "") << "(";
    for (size_t j = 0; j < vs[i].size(); ++j)
      os << (j ? "," : "") << rat_to_string(vs[i][j]);
    os << ")";
  }
  return os.str();
}

}  // namespace

AnalysisReport analyze(const RealizedSpace& space, const std::string& name,
                       const AnalyzeOptions& options) {
  auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.name = name;
  r.algebra_name = space.alg.name;
  r.dim_g = space.alg.g.dim();
  r.dim_h = space.h.dim();

  OpenOrbit orbit = stage("open orbit", [&] {
    return find_open_parabolic(space.alg.g, space.alg.cartan, space.h);
  });
  r.twist_word = orbit.rd.twist_word;

  LocalStructure ls = stage("local structure", [&] { return local_structure(orbit); });
  for (int m : ls.q.marked) r.adapted_weights.push_back(ls.q.rd.roots[ls.q.rd.simple[m]].weight);
  r.dim_q = ls.q.q.dim();
  r.dim_l = ls.q.l.dim();
  r.dim_u = ls.q.u.dim();
  r.dim_l_n = ls.q.l_n.dim();
  r.dim_a_h = ls.a_h.dim();
  r.dim_a_z = ls.a_z.dim();
  r.dim_m_z = ls.m_z.dim();
  r.rank = ls.rank;

  Subspace h_lim = stage("local structure", [&] { return limiting_subalgebra(ls, space.h); });
  r.dim_h_lim = h_lim.dim();

  NormalizerSplit ns = stage("normalizer", [&] { return normalizer_split(orbit); });
  r.a_tilde_dim = ns.a_tilde.dim();
  r.compact_quotient = ns.compact_quotient;

  CompressionResult cr = stage("compression", [&] { return compression_cone(ls, space.h); });
  r.monoid = cr.monoid;
  r.cone = cr.cone;
  r.edge_dim = cr.cone.edge().dim();
  r.sharp = cr.sharp;
  r.wavefront = cr.wavefront;

  WedgeSupport ws = stage("wedge oracle", [&] { return plucker_support(ls, space.h); });
  r.oracle_mu0 = ws.mu0;
  r.oracle_support_size = int(ws.support.size());
  r.oracle_agrees = ws.cone.equals(cr.cone);

  if (!options.skip_numeric) {
    DegenerationLimits limits{options.converge_tol, options.diverge_tol, options.t_max};
    ConeCheck check = stage("degeneration", [&] {
      return verify_cone(ls, space.h, cr.cone, options.samples, options.seed, limits);
    });
    r.numeric_ran = true;
    r.interior_samples = int(check.interior.size());
    r.exterior_samples = int(check.exterior.size());
    r.numeric_passed = check.passed;
    for (const SampledTrajectory& st : check.interior)
      r.worst_residual = std::max(r.worst_residual, st.trajectory.max_residual);
    for (const SampledTrajectory& st : check.exterior)
      r.worst_residual = std::max(r.worst_residual, st.trajectory.max_residual);
  }

  r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return r;
}

nlohmann::ordered_json structured_report(const AnalysisReport& r) {
  ordered_json out;
  out["name"] = r.name;
  out["algebra"] = r.algebra_name;
  out["spherical"] = true;
  out["twist_word"] = r.twist_word;
  out["adapted_subset"] = emit_qvec_list(r.adapted_weights);
  out["dims"] = ordered_json{{"g", r.dim_g},     {"h", r.dim_h},     {"q", r.dim_q},
                             {"l", r.dim_l},     {"u", r.dim_u},     {"l_n", r.dim_l_n},
                             {"a_h", r.dim_a_h}, {"a_z", r.dim_a_z}, {"m_z", r.dim_m_z},
                             {"h_lim", r.dim_h_lim}};
  out["rank"] = r.rank;
  out["normalizer"] =
      ordered_json{{"a_tilde_dim", r.a_tilde_dim}, {"compact_quotient", r.compact_quotient}};
  out["monoid"] = emit_qvec_list(r.monoid);
  out["cone"] = ordered_json{{"rays", emit_int_list(r.cone.rays())},
                             {"lineality", emit_int_list(r.cone.lineality())},
                             {"facets", emit_int_list(r.cone.facets())},
                             {"span_normals", emit_int_list(r.cone.span_normals())}};
  out["edge_dim"] = r.edge_dim;
  out["sharp"] = r.sharp;
  out["wavefront"] = r.wavefront;
  out["oracle"] = ordered_json{{"agrees", r.oracle_agrees},
                               {"mu0", emit_qvec(r.oracle_mu0)},
                               {"support_size", r.oracle_support_size}};
  if (r.numeric_ran) {
    out["degeneration"] = ordered_json{{"ran", true},
                                       {"interior", r.interior_samples},
                                       {"exterior", r.exterior_samples},
                                       {"passed", r.numeric_passed}};
  } else {
    out["degeneration"] = ordered_json{{"ran", false}};
  }
  out["timing_ms"] = r.timing_ms;
  return out;
}

std::string text_report(const AnalysisReport& r) {
  std::ostringstream os;
  os << "space: " << (r.name.empty() ? "(unnamed)" : r.name) << "\n";
  os << "algebra: " << r.algebra_name << ", dim " << r.dim_g << ", subalgebra dim " << r.dim_h
     << "\n";
  os << "spherical: yes, twist word [";
  for (size_t i = 0; i < r.twist_word.size(); ++i) os << (i ? " " : "") << r.twist_word[i];
  os << "]\n";
  os << "adapted parabolic: S = " << join_vectors(r.adapted_weights) << ", dim q = " << r.dim_q
     << (r.adapted_weights.empty() ? " (Q = P)" : "") << "\n";
  os << "splitting dims: l = " << r.dim_l << ", u = " << r.dim_u << ", l_n = " << r.dim_l_n
     << ", a_h = " << r.dim_a_h << ", a_z = " << r.dim_a_z << ", m_z = " << r.dim_m_z << "\n";
  os << "rank: " << r.rank << "\n";
  os << "limiting subalgebra dim: " << r.dim_h_lim << "\n";
  os << "normalizer: a_tilde dim " << r.a_tilde_dim << ", quotient "
     << (r.compact_quotient ? "compact" : "not compact") << "\n";
  os << "monoid generators: " << join_vectors(r.monoid) << "\n";
  os << "compression cone: rays " << join_vectors(r.cone.rays()) << ", lineality "
     << join_vectors(r.cone.lineality()) << ", facets " << join_vectors(r.cone.facets()) << "\n";
  os << "edge dim: " << r.edge_dim << ", sharp: " << (r.sharp ? "yes" : "no")
     << ", wavefront: " << (r.wavefront ? "yes" : "no") << "\n";
  os << "wedge oracle: " << (r.oracle_agrees ? "agrees" : "DISAGREES") << ", mu0 "
     << join_vectors({r.oracle_mu0}) << ", support size " << r.oracle_support_size << "\n";
  if (r.numeric_ran) {
    os << "degeneration check: " << r.interior_samples << " interior, " << r.exterior_samples
       << " exterior, " << (r.numeric_passed ? "passed" : "FAILED") << "\n";
  } else {
    os << "degeneration check: skipped\n";
  }
  os << "time: " << r.timing_ms << " ms\n";
  return os.str();
}

}  // namespace sphex
