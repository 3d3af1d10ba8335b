#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sphex/analyze.hpp"
#include "sphex/catalog.hpp"
#include "sphex/polar_demo.hpp"

using namespace sphex;

namespace {

int run_analyze(const std::string& file, const std::string& format, bool skip_numeric,
                std::optional<double> tmax, std::optional<std::uint64_t> seed,
                std::optional<int> samples) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open " << file << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    SpaceDescription desc = parse_space(buf.str());
    if (skip_numeric) desc.options.skip_numeric = true;
    if (tmax) desc.options.t_max = *tmax;
    if (seed) desc.options.seed = *seed;
    if (samples) desc.options.samples = *samples;
    AnalysisReport report = analyze(desc);
    if (format == "structured")
      std::cout << structured_report(report).dump(2) << "\n";
    else
      std::cout << text_report(report);
    return report.all_checks_passed() ? 0 : 1;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "analysis error: " << e.what() << "\n";
    return 2;
  }
}

int run_demo(int samples, std::uint64_t seed, bool with_flip) {
  PolarSummary s = polar_demo(samples, seed, with_flip);
  std::cout << "samples: " << s.samples << "\n";
  std::cout << "decomposed: " << s.decomposed << " (" << 100.0 * s.coverage() << "%)\n";
  std::cout << "flips used: " << s.flipped << "\n";
  std::cout << "worst residual: " << s.worst_residual << "\n";
  return 0;
}

int run_catalog(const std::string& action, const std::string& name) {
  if (action == "list") {
    for (const CatalogEntry& e : catalog_entries()) std::cout << e.name << "\n";
    return 0;
  }
  std::vector<const CatalogEntry*> todo;
  try {
    if (name.empty())
      for (const CatalogEntry& e : catalog_entries()) todo.push_back(&e);
    else
      todo.push_back(&catalog_entry(name));
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  bool all_ok = true;
  for (const CatalogEntry* e : todo) {
    try {
      CatalogRun run = run_catalog_entry(*e);
      if (run.ok()) {
        std::cout << run.name << ": ok (" << run.report.timing_ms << " ms)\n";
      } else {
        all_ok = false;
        std::cout << run.name << ": MISMATCH\n";
        for (const FieldDiff& d : run.diffs)
          std::cout << "  " << d.path << ": expected " << d.expected << ", got " << d.actual
                    << "\n";
        if (run.diffs.empty()) std::cout << "  a cross-check failed inside the report\n";
      }
    } catch (const error& err) {
      all_ok = false;
      std::cout << e->name << ": ERROR " << err.what() << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure invariants of real spherical pairs"};
  app.require_subcommand(1);

  auto* an = app.add_subcommand("analyze", "analyze a space description file");
  std::string file;
  an->add_option("file", file, "JSON space description")->required();
  std::string format{"text"};
  an->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  bool skip_numeric = false;
  an->add_flag("--skip-numeric", skip_numeric, "skip the degeneration sampling");
  double tmax = 0;
  auto* tmax_opt = an->add_option("--tmax", tmax, "largest flow time");
  std::uint64_t seed = 0;
  auto* seed_opt = an->add_option("--seed", seed, "sampling seed");
  int samples = 0;
  auto* samples_opt =
      an->add_option("--samples", samples, "degeneration samples per side")
          ->check(CLI::PositiveNumber);

  auto* dp = app.add_subcommand("demo-polar", "hyperboloid polar decomposition demo");
  int dsamples = 10000;
  dp->add_option("--samples", dsamples, "points to draw")->check(CLI::PositiveNumber);
  std::uint64_t dseed = 20240817;
  dp->add_option("--seed", dseed, "sampling seed");
  bool no_flip = false;
  dp->add_flag("--no-flip", no_flip, "forbid the z-sign flip");

  auto* cat = app.add_subcommand("catalog", "shipped example spaces");
  std::string action;
  cat->add_option("action", action, "list or run")
      ->required()
      ->check(CLI::IsMember({"list", "run"}));
  std::string name;
  cat->add_option("name", name, "entry name for run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (an->parsed())
    return run_analyze(file, format, skip_numeric,
                       tmax_opt->count() ? std::optional<double>(tmax) : std::nullopt,
                       seed_opt->count() ? std::optional<std::uint64_t>(seed) : std::nullopt,
                       samples_opt->count() ? std::optional<int>(samples) : std::nullopt);
  if (dp->parsed()) return run_demo(dsamples, dseed, !no_flip);
  return run_catalog(action, name);
}
