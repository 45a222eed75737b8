#pragma once

// Data-parallel inner loops of the toolkit. Every kernel exists twice:
// `parallel::` is the OpenMP implementation used in production and
// `serial::` is a plain reference implementation kept for cross-checking in
// tests and for the benchmark target. Both return identical results for any
// worker count.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "powerclaw/group.hpp"

namespace powerclaw {

class CyclicPoset;
class ReducedPowerGraph;
using NodeId = std::uint32_t;

/// One cyclic subgroup <g>: powers[k] = g^k for k in [0, order).
struct CyclicSubgroupRecord {
  Index generator = 0;
  std::vector<Index> powers;

  std::uint64_t order() const { return powers.size(); }
};

/// Lexicographically smallest triple (a < b < c) of pairwise incomparable
/// nodes strictly above `base`, with the smallest such base.
struct AntichainHit {
  NodeId base = 0;
  std::array<NodeId, 3> nodes{};
};

/// Center class representative plus the smallest independent triple of
/// neighbor class representatives, as element indices.
struct ClawHit {
  Index center = 0;
  std::array<Index, 3> pendants{};
};

namespace kernels {

/// Worker count used by the parallel kernels (OpenMP threads).
void set_jobs(int jobs);
int jobs();

namespace serial {
/// Element orders by repeated multiplication.
std::vector<std::uint32_t> element_orders(const Group& g);
/// Sorted indices c with c i = i c.
std::vector<Index> centralizer(const Group& g, Index i);
/// Every cyclic subgroup once, generated by its smallest-index generator,
/// ordered by that generator.
std::vector<CyclicSubgroupRecord> cyclic_subgroups(const Group& g);
/// out[u] = sorted v != u, v != identity, with v a power of u (identity row empty).
std::vector<std::vector<Index>> power_arcs(const Group& g);
std::optional<AntichainHit> second_type_search(const CyclicPoset& poset);
std::optional<ClawHit> brute_claw_search(const ReducedPowerGraph& graph);
/// hist[x] = number of elements of order m whose square is x.
std::vector<std::uint32_t> square_root_counts(const Group& g, std::uint64_t m);
}  // namespace serial

namespace parallel {
/// Element orders from cycle structure (lcm of cycle lengths).
std::vector<std::uint32_t> element_orders(const Group& g);
std::vector<Index> centralizer(const Group& g, Index i);
std::vector<CyclicSubgroupRecord> cyclic_subgroups(const Group& g);
std::vector<std::vector<Index>> power_arcs(const Group& g);
std::optional<AntichainHit> second_type_search(const CyclicPoset& poset);
std::optional<ClawHit> brute_claw_search(const ReducedPowerGraph& graph);
std::vector<std::uint32_t> square_root_counts(const Group& g, std::uint64_t m);
}  // namespace parallel

}  // namespace kernels
}  // namespace powerclaw
