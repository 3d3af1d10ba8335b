#pragma once

#include <cstdint>
#include <string>

#include "sphex/families.hpp"

namespace sphex {

/// Parse failure carrying the path of the offending element inside the
/// document, dotted keys with [i] for array positions.
struct parse_error : error {
  parse_error(const std::string& where, const std::string& what)
      : error(where.empty() ? what : where + ": " + what), path(where) {}
  std::string path;
};

/// Surface form of the algebra entry, kept verbatim so a parsed document can
/// be emitted again without loss. family is one of "sl", "so", "sp",
/// "product", or "explicit" for a raw basis.
struct AlgebraDesc {
  std::string family;
  std::vector<int> params;
  std::vector<AlgebraDesc> factors;
  std::vector<QMatrix> basis;
  bool operator==(const AlgebraDesc&) const = default;
};

struct SubalgebraDesc {
  enum class Kind { basis, involution, diagonal };
  Kind kind = Kind::basis;
  std::vector<QMatrix> basis;
  QMatrix involution;
  bool operator==(const SubalgebraDesc&) const = default;
};

/// Numeric knobs for the degeneration runs; everything else in a document is
/// exact. Defaults match the thresholds the verdicts were tuned for.
struct AnalyzeOptions {
  double converge_tol = 1e-8;
  double diverge_tol = 1e-3;
  double t_max = 50.0;
  int samples = 5;
  std::uint64_t seed = 20240817;
  bool skip_numeric = false;
  bool operator==(const AnalyzeOptions&) const = default;
};

struct SpaceDescription {
  std::string name;
  AlgebraDesc algebra;
  SubalgebraDesc subalgebra;
  std::vector<QMatrix> cartan;  // empty unless the document gives one
  AnalyzeOptions options;
  bool operator==(const SpaceDescription&) const = default;
};

/// The description resolved into actual objects: the realized algebra with
/// its Cartan subspace, and the subalgebra in algebra coordinates.
struct RealizedSpace {
  RealizedAlgebra alg;
  Subspace h;
};

/// Reads the canonical JSON schema: matrices are arrays of rows, entries are
/// rationals written as strings "p/q" or JSON integers, never floats.
SpaceDescription parse_space(const std::string& text);

/// Canonical serialization; parse_space(emit_space(d)) == d.
std::string emit_space(const SpaceDescription& desc);

RealizedSpace realize(const SpaceDescription& desc);

}  // namespace sphex
