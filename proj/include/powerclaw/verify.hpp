#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "powerclaw/catalog.hpp"
#include "powerclaw/power_graph.hpp"

namespace powerclaw {

struct CheckReport {
  std::string check_id;
  std::string subject;
  bool pass = true;
  /// "no counterexample found ..." on PASS, the first counterexample on FAIL.
  std::string summary;
  nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
  double elapsed_seconds = 0.0;
  std::vector<CheckReport> subreports;
};

struct VerifyOptions {
  std::vector<std::string> catalog = default_catalog();
  GroupLimits limits{};
  GraphLimits graph_limits{};
  /// Catalog members up to this order are also decided by brute force.
  std::size_t oracle_max_order = 5000;
};

/// V1 .. V15.
const std::vector<std::string>& check_ids();

/// Runs checks against one shared, lazily analysed catalog so that groups
/// used by several checks are built once.
class Verifier {
 public:
  explicit Verifier(VerifyOptions options = {});
  ~Verifier();
  Verifier(const Verifier&) = delete;
  Verifier& operator=(const Verifier&) = delete;

  /// Throws std::invalid_argument for an unknown id.
  CheckReport run(const std::string& check_id);
  std::vector<CheckReport> run_all();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

CheckReport run_check(const std::string& check_id, const VerifyOptions& options = {});
std::vector<CheckReport> run_all(const VerifyOptions& options = {});

/// Report without timing.
nlohmann::ordered_json report_json(const CheckReport& report);
/// {"data": [reports...], "timings": {"V1": seconds, ...}}. Only "timings"
/// varies between runs.
nlohmann::ordered_json reports_document(const std::vector<CheckReport>& reports);

}  // namespace powerclaw
