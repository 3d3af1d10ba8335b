#include "sphex/space_io.hpp"

#include <json.hpp>

namespace sphex {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string at(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string idx(const std::string& path, size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& field(const json& obj, const std::string& path, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw parse_error(path, "missing field '" + key + "'");
  return *it;
}

void expect_object(const json& v, const std::string& path) {
  if (!v.is_object()) throw parse_error(path, "expected an object");
}

void expect_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw parse_error(path, "expected an array");
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> known) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw parse_error(at(path, it.key()), "unknown field");
  }
}

Rat parse_rat(const json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return rat_from_string(v.get<std::string>());
    } catch (const error& e) {
      throw parse_error(path, e.what());
    }
  }
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_number_unsigned()) return Rat((long)v.get<unsigned long>());
  if (v.is_number_float())
    throw parse_error(path, "rationals must be strings or integers, not floats");
  throw parse_error(path, "expected a rational");
}

QMatrix parse_matrix(const json& v, const std::string& path) {
  expect_array(v, path);
  if (v.empty()) throw parse_error(path, "matrix has no rows");
  size_t cols = 0;
  std::vector<QVec> rows;
  for (size_t i = 0; i < v.size(); ++i) {
    const json& r = v[i];
    expect_array(r, idx(path, i));
    if (i == 0) cols = r.size();
    if (r.size() != cols) throw parse_error(idx(path, i), "rows differ in length");
    QVec row;
    for (size_t j = 0; j < r.size(); ++j) row.push_back(parse_rat(r[j], idx(idx(path, i), j)));
    rows.push_back(row);
  }
  if (cols != v.size()) throw parse_error(path, "matrix is not square");
  return QMatrix::from_rows(rows, int(cols));
}

std::vector<QMatrix> parse_matrix_list(const json& v, const std::string& path) {
  expect_array(v, path);
  if (v.empty()) throw parse_error(path, "empty matrix list");
  std::vector<QMatrix> out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(parse_matrix(v[i], idx(path, i)));
  for (const QMatrix& m : out)
    if (m.rows() != out.front().rows())
      throw parse_error(path, "matrices differ in size");
  return out;
}

int parse_int(const json& v, const std::string& path) {
  if (!v.is_number_integer() && !v.is_number_unsigned())
    throw parse_error(path, "expected an integer");
  return v.get<int>();
}

AlgebraDesc parse_algebra(const json& v, const std::string& path) {
  expect_object(v, path);
  AlgebraDesc out;
  if (v.contains("basis")) {
    reject_unknown(v, path, {"basis"});
    out.family = "explicit";
    out.basis = parse_matrix_list(v["basis"], at(path, "basis"));
    return out;
  }
  const json& fam = field(v, path, "family");
  if (!fam.is_string()) throw parse_error(at(path, "family"), "expected a string");
  out.family = fam.get<std::string>();
  if (out.family == "product") {
    reject_unknown(v, path, {"family", "factors"});
    const json& fs = field(v, path, "factors");
    expect_array(fs, at(path, "factors"));
    if (fs.size() < 2) throw parse_error(at(path, "factors"), "a product needs at least two factors");
    for (size_t i = 0; i < fs.size(); ++i)
      out.factors.push_back(parse_algebra(fs[i], idx(at(path, "factors"), i)));
    return out;
  }
  if (out.family != "sl" && out.family != "so" && out.family != "sp")
    throw parse_error(at(path, "family"), "unknown family '" + out.family + "'");
  reject_unknown(v, path, {"family", "params"});
  const json& ps = field(v, path, "params");
  expect_array(ps, at(path, "params"));
  for (size_t i = 0; i < ps.size(); ++i)
    out.params.push_back(parse_int(ps[i], idx(at(path, "params"), i)));
  size_t want = out.family == "so" ? 2 : 1;
  if (out.params.size() != want)
    throw parse_error(at(path, "params"), "family '" + out.family + "' takes " +
                                              std::to_string(want) + " parameter(s)");
  return out;
}

SubalgebraDesc parse_subalgebra(const json& v, const std::string& path) {
  SubalgebraDesc out;
  if (v.is_string()) {
    if (v.get<std::string>() != "diagonal")
      throw parse_error(path, "the only named subalgebra is \"diagonal\"");
    out.kind = SubalgebraDesc::Kind::diagonal;
    return out;
  }
  expect_object(v, path);
  if (v.contains("basis")) {
    reject_unknown(v, path, {"basis"});
    out.kind = SubalgebraDesc::Kind::basis;
    out.basis = parse_matrix_list(v["basis"], at(path, "basis"));
    return out;
  }
  if (v.contains("symmetric_involution")) {
    reject_unknown(v, path, {"symmetric_involution"});
    out.kind = SubalgebraDesc::Kind::involution;
    out.involution = parse_matrix(v["symmetric_involution"], at(path, "symmetric_involution"));
    return out;
  }
  throw parse_error(path, "expected a basis, a symmetric_involution, or \"diagonal\"");
}

AnalyzeOptions parse_options(const json& v, const std::string& path) {
  expect_object(v, path);
  reject_unknown(v, path, {"converge_tol", "diverge_tol", "t_max", "samples", "seed",
                           "skip_numeric"});
  AnalyzeOptions out;
  if (v.contains("converge_tol")) out.converge_tol = v["converge_tol"].get<double>();
  if (v.contains("diverge_tol")) out.diverge_tol = v["diverge_tol"].get<double>();
  if (v.contains("t_max")) out.t_max = v["t_max"].get<double>();
  if (v.contains("samples")) {
    out.samples = parse_int(v["samples"], at(path, "samples"));
    if (out.samples < 1) throw parse_error(at(path, "samples"), "need at least one sample");
  }
  if (v.contains("seed")) {
    if (!v["seed"].is_number_integer() && !v["seed"].is_number_unsigned())
      throw parse_error(at(path, "seed"), "expected an integer");
    out.seed = v["seed"].get<std::uint64_t>();
  }
  if (v.contains("skip_numeric")) {
    if (!v["skip_numeric"].is_boolean())
      throw parse_error(at(path, "skip_numeric"), "expected a boolean");
    out.skip_numeric = v["skip_numeric"].get<bool>();
  }
  return out;
}

ordered_json emit_matrix(const QMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ordered_json emit_matrix_list(const std::vector<QMatrix>& ms) {
  ordered_json out = ordered_json::array();
  for (const QMatrix& m : ms) out.push_back(emit_matrix(m));
  return out;
}

ordered_json emit_algebra(const AlgebraDesc& a) {
  ordered_json out;
  if (a.family == "explicit") {
    out["basis"] = emit_matrix_list(a.basis);
    return out;
  }
  out["family"] = a.family;
  if (a.family == "product") {
    ordered_json fs = ordered_json::array();
    for (const AlgebraDesc& f : a.factors) fs.push_back(emit_algebra(f));
    out["factors"] = fs;
  } else {
    out["params"] = a.params;
  }
  return out;
}

/// Exact inverse through column solves; the matrix must be invertible.
QMatrix inverse(const QMatrix& m) {
  int n = m.rows();
  QMatrix out(n, n);
  for (int j = 0; j < n; ++j) {
    QVec e(n, Rat(0));
    e[j] = 1;
    auto col = solve(m, e);
    if (!col) throw error("matrix is singular");
    for (int i = 0; i < n; ++i) out.at(i, j) = (*col)[i];
  }
  return out;
}

RealizedAlgebra realize_algebra(const AlgebraDesc& a, const std::vector<QMatrix>& cartan,
                                bool top) {
  if (a.family == "sl") return sl_algebra(a.params[0]);
  if (a.family == "so") return so_algebra(a.params[0], a.params[1]);
  if (a.family == "sp") return sp_algebra(a.params[0]);
  if (a.family == "product") {
    std::vector<RealizedAlgebra> fs;
    for (const AlgebraDesc& f : a.factors) fs.push_back(realize_algebra(f, {}, false));
    return product_algebra(fs);
  }
  // Explicit basis: the Cartan subspace cannot be inferred, the document
  // must provide one.
  if (!top || cartan.empty())
    throw parse_error("cartan", "an explicit basis algebra needs a cartan entry");
  LieAlgebra g = LieAlgebra::build(a.basis);
  std::vector<QVec> coords;
  for (size_t i = 0; i < cartan.size(); ++i) {
    auto c = g.coords_of(cartan[i]);
    if (!c) throw parse_error(idx("cartan", i), "matrix lies outside the algebra");
    coords.push_back(*c);
  }
  return {g, Subspace::span(g.dim(), coords), "explicit"};
}

}  // namespace

SpaceDescription parse_space(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error("", e.what());
  }
  expect_object(doc, "");
  reject_unknown(doc, "", {"name", "algebra", "subalgebra", "cartan", "options"});
  SpaceDescription out;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw parse_error("name", "expected a string");
    out.name = doc["name"].get<std::string>();
  }
  out.algebra = parse_algebra(field(doc, "", "algebra"), "algebra");
  out.subalgebra = parse_subalgebra(field(doc, "", "subalgebra"), "subalgebra");
  if (doc.contains("cartan")) out.cartan = parse_matrix_list(doc["cartan"], "cartan");
  if (doc.contains("options")) out.options = parse_options(doc["options"], "options");
  return out;
}

std::string emit_space(const SpaceDescription& desc) {
  ordered_json doc;
  if (!desc.name.empty()) doc["name"] = desc.name;
  doc["algebra"] = emit_algebra(desc.algebra);
  switch (desc.subalgebra.kind) {
    case SubalgebraDesc::Kind::basis:
      doc["subalgebra"] = ordered_json{{"basis", emit_matrix_list(desc.subalgebra.basis)}};
      break;
    case SubalgebraDesc::Kind::involution:
      doc["subalgebra"] =
          ordered_json{{"symmetric_involution", emit_matrix(desc.subalgebra.involution)}};
      break;
    case SubalgebraDesc::Kind::diagonal:
      doc["subalgebra"] = "diagonal";
      break;
  }
  if (!desc.cartan.empty()) doc["cartan"] = emit_matrix_list(desc.cartan);
  if (!(desc.options == AnalyzeOptions{})) {
    ordered_json opt;
    AnalyzeOptions def;
    if (desc.options.converge_tol != def.converge_tol) opt["converge_tol"] = desc.options.converge_tol;
    if (desc.options.diverge_tol != def.diverge_tol) opt["diverge_tol"] = desc.options.diverge_tol;
    if (desc.options.t_max != def.t_max) opt["t_max"] = desc.options.t_max;
    if (desc.options.samples != def.samples) opt["samples"] = desc.options.samples;
    if (desc.options.seed != def.seed) opt["seed"] = desc.options.seed;
    if (desc.options.skip_numeric != def.skip_numeric) opt["skip_numeric"] = desc.options.skip_numeric;
    doc["options"] = opt;
  }
  return doc.dump(2) + "\n";
}

RealizedSpace realize(const SpaceDescription& desc) {
  RealizedSpace out;
  try {
    out.alg = realize_algebra(desc.algebra, desc.cartan, true);
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    throw parse_error("algebra", e.what());
  }
  const LieAlgebra& g = out.alg.g;

  if (!desc.cartan.empty() && desc.algebra.family != "explicit") {
    std::vector<QVec> coords;
    for (size_t i = 0; i < desc.cartan.size(); ++i) {
      auto c = g.coords_of(desc.cartan[i]);
      if (!c) throw parse_error(idx("cartan", i), "matrix lies outside the algebra");
      coords.push_back(*c);
    }
    out.alg.cartan = Subspace::span(g.dim(), coords);
  }

  switch (desc.subalgebra.kind) {
    case SubalgebraDesc::Kind::basis: {
      std::vector<QVec> coords;
      for (size_t i = 0; i < desc.subalgebra.basis.size(); ++i) {
        if (desc.subalgebra.basis[i].rows() != g.matrix_size())
          throw parse_error(idx("subalgebra.basis", i), "matrix size does not match the algebra");
        auto c = g.coords_of(desc.subalgebra.basis[i]);
        if (!c) throw parse_error(idx("subalgebra.basis", i), "matrix lies outside the algebra");
        coords.push_back(*c);
      }
      out.h = Subspace::span(g.dim(), coords);
      break;
    }
    case SubalgebraDesc::Kind::involution: {
      const QMatrix& j = desc.subalgebra.involution;
      if (j.rows() != g.matrix_size())
        throw parse_error("subalgebra.symmetric_involution",
                          "matrix size does not match the algebra");
      if (det(j) == 0)
        throw parse_error("subalgebra.symmetric_involution", "matrix is singular");
      QMatrix jinv = inverse(j);
      // sigma(X) = -J X^T J^{-1}; the subalgebra is its fixed point set.
      int n = g.dim();
      QMatrix s(n, n);
      for (int k = 0; k < n; ++k) {
        QMatrix image = Rat(-1) * (j * g.basis()[k].transpose() * jinv);
        auto c = g.coords_of(image);
        if (!c)
          throw parse_error("subalgebra.symmetric_involution",
                            "the involution does not preserve the algebra");
        for (int i = 0; i < n; ++i) s.at(i, k) = (*c)[i];
      }
      if (!(s * s == QMatrix::identity(n)))
        throw parse_error("subalgebra.symmetric_involution", "the map is not an involution");
      out.h = Subspace::span(n, kernel_basis(s - QMatrix::identity(n)));
      break;
    }
    case SubalgebraDesc::Kind::diagonal: {
      if (desc.algebra.family != "product")
        throw parse_error("subalgebra", "\"diagonal\" needs a product algebra");
      for (const AlgebraDesc& f : desc.algebra.factors)
        if (!(f == desc.algebra.factors.front()))
          throw parse_error("subalgebra", "\"diagonal\" needs identical factors");
      RealizedAlgebra factor = realize_algebra(desc.algebra.factors.front(), {}, false);
      int m = factor.g.dim();
      int copies = int(desc.algebra.factors.size());
      std::vector<QVec> coords;
      for (int i = 0; i < m; ++i) {
        QVec v(m * copies, Rat(0));
        for (int c = 0; c < copies; ++c) v[c * m + i] = 1;
        coords.push_back(v);
      }
      out.h = Subspace::span(g.dim(), coords);
      break;
    }
  }
  return out;
}

}  // namespace sphex
