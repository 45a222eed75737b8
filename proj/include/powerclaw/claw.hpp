#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "powerclaw/power_graph.hpp"

namespace powerclaw {

/// FIRST: every arc runs center -> pendant. SECOND: every arc runs pendant
/// -> center. MIXED never occurs in a power graph; it exists so that a
/// violation can be reported rather than hidden.
enum class ClawKind { First, Second, Mixed };

std::string_view to_string(ClawKind kind);

/// Induced K_{1,3} in P*(G). Pendants are sorted by index.
struct ClawWitness {
  ClawKind kind = ClawKind::First;
  Index center = 0;
  std::array<Index, 3> pendants{};

  friend bool operator==(const ClawWitness&, const ClawWitness&) = default;
};

/// Exhaustive neighborhood search over the graph, lexicographically smallest
/// (center, pendants); kind read off the arcs afterwards.
std::optional<ClawWitness> find_claw_brute(const ReducedPowerGraph& graph);

/// Decision on the cyclic subgroup poset alone: a node whose order is not in
/// Omega gives a first-type claw, a node with three pairwise incomparable
/// nodes above it gives a second-type claw.
std::optional<ClawWitness> find_claw_fast(const CyclicPoset& poset);

/// Checks the witness against the definition with explicit powers of the
/// four elements: center adjacent to each pendant, pendants pairwise
/// non-adjacent, arcs consistent with the declared kind.
bool validate_witness(const Group& g, const ClawWitness& w);

/// Kind from arc directions in the group (explicit powers).
ClawKind arc_kind(const Group& g, Index center, const std::array<Index, 3>& pendants);

/// v is a positive power of u.
bool is_power_of(const Group& g, Index v, Index u);

struct ClawOptions {
  /// Groups with at most this many non-identity elements get the fast
  /// answer cross-checked by a brute-force search on an independently
  /// built power graph.
  std::size_t validation_max_vertices = 300'000;
  GraphLimits graph_limits{};
};

struct ClawDecision {
  bool claw_free = true;
  std::optional<ClawWitness> witness;
  /// The decision was confirmed by the brute-force route.
  bool validated = false;
  /// Only the poset route ran (group above the validation cap).
  bool fast_path_only = false;
};

/// Throws std::logic_error if the two routes disagree.
ClawDecision is_claw_free(const CyclicPoset& poset, const ClawOptions& options = {});
ClawDecision is_claw_free(const Group& g, const ClawOptions& options = {});

/// Nodes of order m strictly containing <i>.
std::size_t count_cyclic_overgroups(const CyclicPoset& poset, Index i, std::uint64_t m);
/// |{x : x^2 = i, |x| = m}|.
std::size_t count_square_roots(const Group& g, Index i, std::uint64_t m);

/// {"kind","center":{"index","order"},"pendants":[{"index","order"} x3]}
nlohmann::ordered_json witness_json(const Group& g, const ClawWitness& w);

}  // namespace powerclaw
