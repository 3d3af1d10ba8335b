#pragma once

#include "sphex/analyze.hpp"

namespace sphex {

/// A shipped example: the space description document plus the expected
/// report fragment it must reproduce. The fragment pins every stable field;
/// timing is left out.
struct CatalogEntry {
  std::string name;
  std::string document;
  nlohmann::json expected;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);  // throws on unknown name

struct FieldDiff {
  std::string path;
  std::string expected;
  std::string actual;
};

/// Field-by-field containment check: every key pinned in expected must be
/// present in actual with the same value; objects recurse, everything else
/// compares exactly.
std::vector<FieldDiff> compare_reports(const nlohmann::json& expected,
                                       const nlohmann::json& actual);

struct CatalogRun {
  std::string name;
  AnalysisReport report;
  std::vector<FieldDiff> diffs;
  bool ok() const { return diffs.empty() && report.all_checks_passed(); }
};

CatalogRun run_catalog_entry(const CatalogEntry& entry);

}  // namespace sphex
