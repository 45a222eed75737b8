#include "powerclaw/claw.hpp"

#include <algorithm>

#include "powerclaw/numtheory.hpp"

namespace powerclaw {

std::string_view to_string(ClawKind kind) {
  switch (kind) {
    case ClawKind::First:
      return "FIRST";
    case ClawKind::Second:
      return "SECOND";
    case ClawKind::Mixed:
      return "MIXED";
  }
  return "?";
}

bool is_power_of(const Group& g, Index v, Index u) {
  if (v == u) return true;
  for (Index y = g.mul(u, u); y != u; y = g.mul(y, u)) {
    if (y == v) return true;
  }
  return false;
}

ClawKind arc_kind(const Group& g, Index center, const std::array<Index, 3>& pendants) {
  bool out = true;
  bool in = true;
  for (Index p : pendants) {
    out = out && is_power_of(g, p, center);
    in = in && is_power_of(g, center, p);
  }
  if (out && !in) return ClawKind::First;
  if (in && !out) return ClawKind::Second;
  return ClawKind::Mixed;
}

std::optional<ClawWitness> find_claw_brute(const ReducedPowerGraph& graph) {
  const auto hit = kernels::parallel::brute_claw_search(graph);
  if (!hit) return std::nullopt;
  ClawWitness w;
  w.center = hit->center;
  w.pendants = hit->pendants;
  bool out = true;
  bool in = true;
  for (Index p : w.pendants) {
    out = out && graph.has_arc(w.center, p);
    in = in && graph.has_arc(p, w.center);
  }
  w.kind = out && !in ? ClawKind::First : in && !out ? ClawKind::Second : ClawKind::Mixed;
  return w;
}

namespace {

ClawWitness first_type_witness(const CyclicPoset& poset, NodeId id) {
  const Group& g = poset.group();
  const Index gen = poset.node(id).generator;
  const std::uint64_t n = poset.node(id).order;
  const auto f = factorize(n);
  std::array<std::uint64_t, 3> exps{};
  if (f.factors.size() >= 3) {
    exps = {f.factors[0].prime, f.factors[1].prime, f.factors[2].prime};
  } else {
    const std::uint64_t p = f.factors[0].prime;
    const std::uint64_t q = f.factors[1].prime;
    exps = {p * p, q * q, p * q};
  }
  ClawWitness w;
  w.kind = ClawKind::First;
  w.center = gen;
  for (std::size_t k = 0; k < 3; ++k) w.pendants[k] = g.pow(gen, exps[k]);
  std::sort(w.pendants.begin(), w.pendants.end());
  return w;
}

}  // namespace

std::optional<ClawWitness> find_claw_fast(const CyclicPoset& poset) {
  for (NodeId id = 1; id < poset.size(); ++id) {
    if (!in_omega(poset.node(id).order)) return first_type_witness(poset, id);
  }
  const auto hit = kernels::parallel::second_type_search(poset);
  if (!hit) return std::nullopt;
  ClawWitness w;
  w.kind = ClawKind::Second;
  w.center = poset.node(hit->base).generator;
  for (std::size_t k = 0; k < 3; ++k) w.pendants[k] = poset.node(hit->nodes[k]).generator;
  std::sort(w.pendants.begin(), w.pendants.end());
  return w;
}

bool validate_witness(const Group& g, const ClawWitness& w) {
  const Index n = g.order();
  const auto& p = w.pendants;
  if (w.center == Group::identity() || w.center >= n) return false;
  for (Index x : p) {
    if (x == Group::identity() || x >= n || x == w.center) return false;
  }
  if (p[0] == p[1] || p[0] == p[2] || p[1] == p[2]) return false;
  auto adjacent = [&](Index a, Index b) { return is_power_of(g, a, b) || is_power_of(g, b, a); };
  for (Index x : p) {
    if (!adjacent(w.center, x)) return false;
  }
  if (adjacent(p[0], p[1]) || adjacent(p[0], p[2]) || adjacent(p[1], p[2])) return false;
  return w.kind != ClawKind::Mixed && arc_kind(g, w.center, p) == w.kind;
}

ClawDecision is_claw_free(const CyclicPoset& poset, const ClawOptions& options) {
  const Group& g = poset.group();
  ClawDecision d;
  d.witness = find_claw_fast(poset);
  d.claw_free = !d.witness;
  if (d.witness) {
    if (!validate_witness(g, *d.witness)) throw std::logic_error("fast-path claw witness failed validation");
    d.validated = true;
    return d;
  }
  if (static_cast<std::size_t>(g.order()) - 1 > options.validation_max_vertices) {
    d.fast_path_only = true;
    return d;
  }
  const auto oracle = power_graph_by_powers(g, options.graph_limits);
  if (const auto brute = find_claw_brute(oracle)) {
    throw std::logic_error("brute-force search found a claw the poset route missed in " + g.label());
  }
  d.validated = true;
  return d;
}

ClawDecision is_claw_free(const Group& g, const ClawOptions& options) {
  const CyclicPoset poset(g);
  return is_claw_free(poset, options);
}

std::size_t count_cyclic_overgroups(const CyclicPoset& poset, Index i, std::uint64_t m) {
  std::size_t count = 0;
  for (NodeId b : poset.above(poset.node_of(i))) count += poset.node(b).order == m;
  return count;
}

std::size_t count_square_roots(const Group& g, Index i, std::uint64_t m) {
  std::size_t count = 0;
  for (Index x = 0; x < g.order(); ++x) {
    if (g.mul(x, x) == i && g.element_order(x) == m) ++count;
  }
  return count;
}

nlohmann::ordered_json witness_json(const Group& g, const ClawWitness& w) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(w.kind));
  j["center"] = {{"index", w.center}, {"order", g.element_order(w.center)}};
  j["pendants"] = nlohmann::ordered_json::array();
  for (Index p : w.pendants) j["pendants"].push_back({{"index", p}, {"order", g.element_order(p)}});
  return j;
}

}  // namespace powerclaw
