#include "powerclaw/analysis.hpp"

#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "powerclaw/group_spec.hpp"

namespace powerclaw {

using json = nlohmann::ordered_json;

namespace {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

std::string factorization_text(const Factorization& f) {
  if (f.factors.empty()) return "1";
  std::string out;
  for (const auto& pp : f.factors) {
    if (!out.empty()) out += " * ";
    out += std::to_string(pp.prime);
    if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
  }
  return out;
}

AnalysisReport analyze(const std::string& spec, const AnalysisOptions& options) {
  AnalysisReport r;
  Stopwatch clock;
  const Group g = build_group(spec, options.limits);
  r.timings.emplace_back("build", clock.lap());

  r.label = g.label();
  r.order = g.order();
  r.factorization = factorize(g.order());
  r.pi = r.factorization.factors.size();
  r.spectrum = order_spectrum(g);
  r.exponent = exponent(g);
  r.eppo = is_eppo(g);
  r.nilpotent = is_nilpotent(g);
  r.solvable = r.nilpotent || is_solvable(g);
  r.timings.emplace_back("structure", clock.lap());

  const CyclicPoset poset(g);
  r.cyclic_nodes = poset.size();
  r.timings.emplace_back("poset", clock.lap());

  ClawOptions claw;
  claw.validation_max_vertices = options.validation_max_vertices;
  claw.graph_limits = options.graph_limits;
  r.decision = is_claw_free(poset, claw);
  r.witness = r.decision.witness ? witness_json(g, *r.decision.witness) : json(nullptr);
  r.timings.emplace_back("claw", clock.lap());
  return r;
}

json analysis_json(const AnalysisReport& r) {
  json data;
  data["label"] = r.label;
  data["order"] = r.order;
  json fact = json::array();
  for (const auto& pp : r.factorization.factors) fact.push_back({{"prime", pp.prime}, {"exponent", pp.exponent}});
  data["factorization"] = std::move(fact);
  data["pi"] = r.pi;
  json spectrum = json::object();
  for (const auto& [o, n] : r.spectrum) spectrum[std::to_string(o)] = n;
  data["spectrum"] = std::move(spectrum);
  data["nilpotent"] = r.nilpotent;
  data["solvable"] = r.solvable;
  data["exponent"] = r.exponent;
  data["eppo"] = r.eppo;
  data["cyclic_nodes"] = r.cyclic_nodes;
  data["claw_free"] = r.decision.claw_free;
  data["witness"] = r.witness;
  data["validated"] = r.decision.validated;
  data["fast_path_only"] = r.decision.fast_path_only;

  json timings = json::object();
  for (const auto& [stage, s] : r.timings) timings[stage] = s;
  json doc;
  doc["data"] = std::move(data);
  doc["timings"] = std::move(timings);
  return doc;
}

std::string analysis_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "group:          " << r.label << "\n"
     << "order:          " << r.order << " = " << factorization_text(r.factorization) << "\n"
     << "pi:             " << r.pi << "\n"
     << "spectrum:      ";
  for (const auto& [o, n] : r.spectrum) os << " " << o << ":" << n;
  os << "\n"
     << "exponent:       " << r.exponent << "\n"
     << "nilpotent:      " << (r.nilpotent ? "yes" : "no") << "\n"
     << "solvable:       " << (r.solvable ? "yes" : "no") << "\n"
     << "eppo:           " << (r.eppo ? "yes" : "no") << "\n"
     << "cyclic nodes:   " << r.cyclic_nodes << "\n"
     << "claw-free:      " << (r.decision.claw_free ? "yes" : "no") << "\n";
  if (r.decision.witness) {
    const auto& w = r.witness;
    os << "witness:        " << w["kind"].get<std::string>() << " center " << w["center"]["index"] << " (order "
       << w["center"]["order"] << "), pendants";
    for (const auto& p : w["pendants"]) os << " " << p["index"] << " (order " << p["order"] << ")";
    os << "\n";
  }
  os << "validated:      " << (r.decision.validated ? "yes" : "no") << "\n";
  if (r.decision.fast_path_only) os << "note:           fast path only, brute-force validation skipped\n";
  os << "timings:       ";
  for (const auto& [stage, s] : r.timings) os << " " << stage << "=" << s << "s";
  os << "\n";
  return os.str();
}

std::vector<Psl2Row> psl2_scan(std::uint64_t q_max) {
  if (q_max > 1'000'000) throw std::invalid_argument("psl2-scan: q_max must be at most 1000000");
  std::vector<Psl2Row> rows;
  for (std::uint64_t q = 4; q <= q_max; ++q) {
    if (!is_prime_power(q)) continue;
    Psl2Row row;
    row.q = q;
    row.d = std::gcd(q - 1, std::uint64_t{2});
    row.minus = (q - 1) / row.d;
    row.plus = (q + 1) / row.d;
    row.minus_class = omega_class(row.minus);
    row.plus_class = omega_class(row.plus);
    row.claw_free = psl2_clawfree_predicate(q);
    // d only removes a factor 2 from q^2 - 1, which is divisible by 8 for odd q.
    std::set<std::uint64_t> primes;
    for (std::uint64_t n : {q, q - 1, q + 1}) {
      for (std::uint64_t p : factorize(n).primes()) primes.insert(p);
    }
    row.pi = primes.size();
    rows.push_back(row);
  }
  return rows;
}

json psl2_scan_json(const std::vector<Psl2Row>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"q", r.q},
                   {"d", r.d},
                   {"q_minus_1_over_d", r.minus},
                   {"q_plus_1_over_d", r.plus},
                   {"minus_class", std::string(to_string(r.minus_class))},
                   {"plus_class", std::string(to_string(r.plus_class))},
                   {"claw_free", r.claw_free},
                   {"pi", r.pi}});
  }
  return out;
}

std::string psl2_scan_csv(const std::vector<Psl2Row>& rows) {
  std::ostringstream os;
  os << "q,d,q_minus_1_over_d,q_plus_1_over_d,minus_class,plus_class,claw_free,pi\n";
  for (const auto& r : rows) {
    os << r.q << "," << r.d << "," << r.minus << "," << r.plus << "," << to_string(r.minus_class) << ","
       << to_string(r.plus_class) << "," << (r.claw_free ? "true" : "false") << "," << r.pi << "\n";
  }
  return os.str();
}

}  // namespace powerclaw
