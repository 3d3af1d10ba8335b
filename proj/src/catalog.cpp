#include "sphex/catalog.hpp"

namespace sphex {

namespace {

using nlohmann::json;

// The five shipped spaces. Expected values were computed twice, through the
// monoid of the graph map and through the wedge support, and pinned only
// once both routes agreed.

const char* kDocSl2So11 = R"json({
  "name": "sl2_so11",
  "algebra": {"family": "sl", "params": [2]},
  "subalgebra": {"basis": [[["0", "1"], ["1", "0"]]]}
})json";

const char* kExpSl2So11 = R"json({
  "name": "sl2_so11",
  "algebra": "sl(2,R)",
  "spherical": true,
  "twist_word": [],
  "adapted_subset": [],
  "dims": {"g": 3, "h": 1, "q": 2, "l": 1, "u": 1, "l_n": 0,
           "a_h": 0, "a_z": 1, "m_z": 0, "h_lim": 1},
  "rank": 1,
  "normalizer": {"a_tilde_dim": 0, "compact_quotient": true},
  "monoid": [["4"]],
  "cone": {"rays": [[-1]], "lineality": [], "facets": [[1]], "span_normals": []},
  "edge_dim": 0,
  "sharp": true,
  "wavefront": true,
  "oracle": {"agrees": true, "mu0": ["-2"], "support_size": 2},
  "degeneration": {"ran": true, "interior": 6, "exterior": 5, "passed": true}
})json";

const char* kDocSl2So2 = R"json({
  "name": "sl2_so2",
  "algebra": {"family": "sl", "params": [2]},
  "subalgebra": {"basis": [[["0", "1"], ["-1", "0"]]]}
})json";

const char* kExpSl2So2 = R"json({
  "name": "sl2_so2",
  "algebra": "sl(2,R)",
  "spherical": true,
  "twist_word": [],
  "adapted_subset": [],
  "dims": {"g": 3, "h": 1, "q": 2, "l": 1, "u": 1, "l_n": 0,
           "a_h": 0, "a_z": 1, "m_z": 0, "h_lim": 1},
  "rank": 1,
  "normalizer": {"a_tilde_dim": 0, "compact_quotient": true},
  "monoid": [["4"]],
  "cone": {"rays": [[-1]], "lineality": [], "facets": [[1]], "span_normals": []},
  "edge_dim": 0,
  "sharp": true,
  "wavefront": true,
  "oracle": {"agrees": true, "mu0": ["-2"], "support_size": 2},
  "degeneration": {"ran": true, "interior": 6, "exterior": 5, "passed": true}
})json";

const char* kDocSl2N = R"json({
  "name": "sl2_n",
  "algebra": {"family": "sl", "params": [2]},
  "subalgebra": {"basis": [[["0", "1"], ["0", "0"]]]}
})json";

const char* kExpSl2N = R"json({
  "name": "sl2_n",
  "algebra": "sl(2,R)",
  "spherical": true,
  "twist_word": [0],
  "adapted_subset": [],
  "dims": {"g": 3, "h": 1, "q": 2, "l": 1, "u": 1, "l_n": 0,
           "a_h": 0, "a_z": 1, "m_z": 0, "h_lim": 1},
  "rank": 1,
  "normalizer": {"a_tilde_dim": 1, "compact_quotient": false},
  "monoid": [],
  "cone": {"rays": [], "lineality": [[1]], "facets": [], "span_normals": []},
  "edge_dim": 1,
  "sharp": false,
  "wavefront": false,
  "oracle": {"agrees": true, "mu0": ["2"], "support_size": 1},
  "degeneration": {"ran": true, "interior": 6, "exterior": 0, "passed": true}
})json";

const char* kDocSl2xSl2 = R"json({
  "name": "sl2xsl2_diag",
  "algebra": {"family": "product",
              "factors": [{"family": "sl", "params": [2]},
                          {"family": "sl", "params": [2]}]},
  "subalgebra": "diagonal"
})json";

const char* kExpSl2xSl2 = R"json({
  "name": "sl2xsl2_diag",
  "algebra": "sl(2,R) x sl(2,R)",
  "spherical": true,
  "twist_word": [0],
  "adapted_subset": [],
  "dims": {"g": 6, "h": 3, "q": 4, "l": 2, "u": 2, "l_n": 0,
           "a_h": 1, "a_z": 1, "m_z": 0, "h_lim": 3},
  "rank": 1,
  "normalizer": {"a_tilde_dim": 0, "compact_quotient": true},
  "monoid": [["4"]],
  "cone": {"rays": [[-1]], "lineality": [], "facets": [[1]], "span_normals": []},
  "edge_dim": 0,
  "sharp": true,
  "wavefront": true,
  "oracle": {"agrees": true, "mu0": ["-4"], "support_size": 3},
  "degeneration": {"ran": true, "interior": 6, "exterior": 5, "passed": true}
})json";

const char* kDocSl3So21 = R"json({
  "name": "sl3_so21",
  "algebra": {"family": "sl", "params": [3]},
  "subalgebra": {"symmetric_involution": [["1", "0", "0"],
                                          ["0", "1", "0"],
                                          ["0", "0", "-1"]]}
})json";

const char* kExpSl3So21 = R"json({
  "name": "sl3_so21",
  "algebra": "sl(3,R)",
  "spherical": true,
  "twist_word": [],
  "adapted_subset": [],
  "dims": {"g": 8, "h": 3, "q": 5, "l": 2, "u": 3, "l_n": 0,
           "a_h": 0, "a_z": 2, "m_z": 0, "h_lim": 3},
  "rank": 2,
  "normalizer": {"a_tilde_dim": 0, "compact_quotient": true},
  "monoid": [["-2", "4"], ["2", "2"], ["4", "-2"]],
  "cone": {"rays": [[-2, -1], [-1, -2]], "lineality": [],
           "facets": [[-1, 2], [2, -1]], "span_normals": []},
  "edge_dim": 0,
  "sharp": true,
  "wavefront": true,
  "oracle": {"agrees": true, "mu0": ["-2", "-2"], "support_size": 7},
  "degeneration": {"ran": true, "interior": 6, "exterior": 5, "passed": true}
})json";

void walk(const json& expected, const json& actual, const std::string& path,
          std::vector<FieldDiff>& out) {
  if (expected.is_object()) {
    if (!actual.is_object()) {
      out.push_back({path, expected.dump(), actual.dump()});
      return;
    }
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      std::string sub = path.empty() ? it.key() : path + "." + it.key();
      if (!actual.contains(it.key())) {
        out.push_back({sub, it.value().dump(), "(missing)"});
        continue;
      }
      walk(it.value(), actual[it.key()], sub, out);
    }
    return;
  }
  if (expected != actual) out.push_back({path, expected.dump(), actual.dump()});
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    auto add = [&](const char* doc, const char* exp) {
      json e = json::parse(exp);
      out.push_back({e["name"].get<std::string>(), doc, e});
    };
    add(kDocSl2So11, kExpSl2So11);
    add(kDocSl2So2, kExpSl2So2);
    add(kDocSl2N, kExpSl2N);
    add(kDocSl2xSl2, kExpSl2xSl2);
    add(kDocSl3So21, kExpSl3So21);
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog_entries())
    if (e.name == name) return e;
  throw error("catalog: no entry named '" + name + "'");
}

std::vector<FieldDiff> compare_reports(const json& expected, const json& actual) {
  std::vector<FieldDiff> out;
  walk(expected, actual, "", out);
  return out;
}

CatalogRun run_catalog_entry(const CatalogEntry& entry) {
  CatalogRun run;
  run.name = entry.name;
  run.report = analyze(parse_space(entry.document));
  run.diffs = compare_reports(entry.expected, structured_report(run.report));
  return run;
}

}  // namespace sphex
