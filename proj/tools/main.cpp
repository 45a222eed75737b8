// powerclaw: build groups from spec strings, decide claw-freeness of their
// reduced power graphs, run the verification checks.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "powerclaw/analysis.hpp"
#include "powerclaw/catalog.hpp"
#include "powerclaw/group_spec.hpp"
#include "powerclaw/kernels.hpp"
#include "powerclaw/verify.hpp"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kCap = 3 };

struct Settings {
  std::string format = "text";
  std::uint64_t max_order = 1'000'000;
  std::size_t max_graph_vertices = 300'000;
  int jobs = 0;
  std::string catalog_path;
};

powerclaw::AnalysisOptions analysis_options(const Settings& s) {
  powerclaw::AnalysisOptions o;
  o.limits.max_order = s.max_order;
  o.graph_limits.max_vertices = s.max_graph_vertices;
  o.validation_max_vertices = s.max_graph_vertices;
  return o;
}

std::vector<std::string> catalog_of(const Settings& s) {
  return s.catalog_path.empty() ? powerclaw::default_catalog() : powerclaw::load_catalog(s.catalog_path);
}

int cmd_analyze(const Settings& s, const std::string& spec) {
  const auto report = powerclaw::analyze(spec, analysis_options(s));
  if (s.format == "json") {
    std::cout << powerclaw::analysis_json(report).dump(2) << "\n";
  } else {
    std::cout << powerclaw::analysis_text(report);
  }
  return kOk;
}

int cmd_verify(const Settings& s, std::vector<std::string> ids) {
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = powerclaw::check_ids();
  const auto& known = powerclaw::check_ids();
  for (const auto& id : ids) {
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      std::cerr << "error: unknown check id " << id << "\n";
      return kUsage;
    }
  }
  powerclaw::VerifyOptions opts;
  opts.catalog = catalog_of(s);
  opts.limits.max_order = s.max_order;
  opts.graph_limits.max_vertices = s.max_graph_vertices;
  powerclaw::Verifier verifier(opts);

  std::vector<powerclaw::CheckReport> reports;
  bool all_pass = true;
  for (const auto& id : ids) {
    reports.push_back(verifier.run(id));
    const auto& r = reports.back();
    all_pass = all_pass && r.pass;
    if (s.format == "text") {
      std::cout << r.check_id << " " << (r.pass ? "PASS" : "FAIL") << "  " << r.summary << "  (" << r.elapsed_seconds
                << " s)\n";
      for (const auto& sub : r.subreports) {
        std::cout << "  - " << sub.subject << ": " << (sub.pass ? "PASS" : "FAIL") << "  " << sub.summary << "\n";
      }
      if (!r.pass) std::cout << "  evidence: " << r.evidence.dump() << "\n";
      std::cout.flush();
    }
  }
  if (s.format == "json") std::cout << powerclaw::reports_document(reports).dump(2) << "\n";
  return all_pass ? kOk : kCheckFailed;
}

int cmd_psl2_scan(const Settings& s, std::uint64_t q_max) {
  const auto rows = powerclaw::psl2_scan(q_max);
  if (s.format == "json") {
    std::cout << powerclaw::psl2_scan_json(rows).dump(2) << "\n";
  } else {
    std::cout << powerclaw::psl2_scan_csv(rows);
  }
  return kOk;
}

int cmd_catalog(const Settings& s) {
  const auto specs = catalog_of(s);
  if (s.format == "json") {
    std::cout << nlohmann::ordered_json(specs).dump(2) << "\n";
  } else {
    for (const auto& spec : specs) std::cout << spec << "\n";
  }
  return kOk;
}

int cmd_export_dot(const Settings& s, const std::string& spec, const std::string& out) {
  const powerclaw::Group g = powerclaw::build_group(spec, analysis_options(s).limits);
  powerclaw::GraphLimits limits;
  limits.max_vertices = s.max_graph_vertices;
  const auto graph = powerclaw::power_graph_by_powers(g, limits);
  if (s.format == "json") {
    powerclaw::export_json(graph, out);
  } else {
    powerclaw::export_dot(graph, out);
  }
  std::cerr << "wrote " << out << " (" << graph.vertex_count() << " vertices, " << graph.edge_count() << " edges)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Claw-freeness of reduced power graphs of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-order", s.max_order, "Largest group order to enumerate")
      ->envname("POWERCLAW_MAX_ORDER")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-graph-vertices", s.max_graph_vertices, "Largest power graph to build and validate")
      ->envname("POWERCLAW_MAX_GRAPH_VERTICES")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", s.jobs, "Worker threads for the parallel kernels (0: OpenMP default)")
      ->envname("POWERCLAW_JOBS")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--catalog", s.catalog_path, "Catalog file, one spec per line")->check(CLI::ExistingFile);

  std::string spec, out_path;
  std::vector<std::string> ids;
  std::uint64_t q_max = 100;

  auto* analyze = app.add_subcommand("analyze", "Analyze one group, e.g. \"C(2)xSemi(91,6,auto)\"");
  analyze->add_option("spec", spec, "Group spec")->required();
  auto* verify = app.add_subcommand("verify", "Run checks V1..V15 (default: all)");
  verify->add_option("ids", ids, "Check ids or \"all\"");
  auto* scan = app.add_subcommand("psl2-scan", "Tabulate the PSL(2,q) criterion over prime powers 4 <= q <= q_max");
  scan->add_option("q_max", q_max, "Largest q")->check(CLI::Range(std::uint64_t{4}, std::uint64_t{1'000'000}));
  auto* catalog = app.add_subcommand("catalog", "List the catalog (built-in or --catalog FILE)");
  auto* dot = app.add_subcommand("export-dot", "Write the reduced power graph as DOT (or JSON with --format json)");
  dot->add_option("spec", spec, "Group spec")->required();
  dot->add_option("out", out_path, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (s.jobs > 0) powerclaw::kernels::set_jobs(s.jobs);

  try {
    if (*analyze) return cmd_analyze(s, spec);
    if (*verify) return cmd_verify(s, ids);
    if (*scan) return cmd_psl2_scan(s, q_max);
    if (*catalog) return cmd_catalog(s);
    if (*dot) return cmd_export_dot(s, spec, out_path);
  } catch (const powerclaw::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
