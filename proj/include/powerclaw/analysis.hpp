#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "powerclaw/claw.hpp"
#include "powerclaw/numtheory.hpp"
#include "powerclaw/structure.hpp"

namespace powerclaw {

struct AnalysisOptions {
  GroupLimits limits{};
  GraphLimits graph_limits{};
  std::size_t validation_max_vertices = 300'000;
};

struct AnalysisReport {
  std::string label;
  std::uint64_t order = 0;
  Factorization factorization;
  std::size_t pi = 0;
  OrderSpectrum spectrum;
  bool nilpotent = false;
  bool solvable = false;
  std::uint64_t exponent = 0;
  bool eppo = false;
  std::size_t cyclic_nodes = 0;
  ClawDecision decision;
  /// witness_json of decision.witness, null when claw-free.
  nlohmann::ordered_json witness;
  /// Stage name -> seconds, in execution order.
  std::vector<std::pair<std::string, double>> timings;
};

/// Parses, builds and analyses one group spec.
AnalysisReport analyze(const std::string& spec, const AnalysisOptions& options = {});

/// {"data": {...}, "timings": {...}}; "data" is reproducible byte for byte.
nlohmann::ordered_json analysis_json(const AnalysisReport& report);
std::string analysis_text(const AnalysisReport& report);

/// "2^6 * 3^2 * 5", "1" for 1.
std::string factorization_text(const Factorization& f);

struct Psl2Row {
  std::uint64_t q = 0;
  std::uint64_t d = 1;
  std::uint64_t minus = 0;  // (q-1)/d
  std::uint64_t plus = 0;   // (q+1)/d
  OmegaClass minus_class = OmegaClass::Unit;
  OmegaClass plus_class = OmegaClass::Unit;
  bool claw_free = false;
  /// Distinct primes dividing q(q^2-1)/d.
  std::size_t pi = 0;
};

/// Every prime power 4 <= q <= q_max; q_max at most 10^6.
std::vector<Psl2Row> psl2_scan(std::uint64_t q_max);
nlohmann::ordered_json psl2_scan_json(const std::vector<Psl2Row>& rows);
std::string psl2_scan_csv(const std::vector<Psl2Row>& rows);

}  // namespace powerclaw
