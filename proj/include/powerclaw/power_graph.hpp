#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "powerclaw/group.hpp"
#include "powerclaw/kernels.hpp"

namespace powerclaw {

struct CyclicNode {
  /// Smallest element index among the generators of the subgroup.
  Index generator = 0;
  std::uint64_t order = 1;
  /// Sorted element indices.
  std::vector<Index> members;
  /// (d, node) for every divisor d of order, increasing in d; the node is the
  /// unique subgroup of order d.
  std::vector<std::pair<std::uint64_t, NodeId>> subgroups;
};

/// All cyclic subgroups of a group ordered by (order, generator), with the
/// strict containment relation. Node 0 is the trivial subgroup. Holds a
/// reference to the group, which must outlive it.
class CyclicPoset {
 public:
  enum class Strategy { Serial, Parallel };

  CyclicPoset(const Group& g, Strategy strategy = Strategy::Parallel);

  const Group& group() const noexcept { return *group_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const CyclicNode& node(NodeId id) const { return nodes_[id]; }
  std::span<const CyclicNode> nodes() const noexcept { return nodes_; }
  static constexpr NodeId trivial() noexcept { return 0; }

  /// The node <i>.
  NodeId node_of(Index i) const { return node_of_[i]; }
  std::uint64_t element_order(Index i) const { return nodes_[node_of_[i]].order; }

  /// Strictly larger / smaller nodes, sorted by id.
  std::span<const NodeId> above(NodeId id) const { return above_[id]; }
  std::span<const NodeId> below(NodeId id) const { return below_[id]; }

  std::optional<NodeId> subgroup_of_order(NodeId id, std::uint64_t d) const;
  /// small is a subgroup of big (not necessarily strict).
  bool contains(NodeId big, NodeId small) const;
  bool comparable(NodeId a, NodeId b) const { return contains(a, b) || contains(b, a); }

  /// Elements generating the node, increasing.
  std::vector<Index> generators_of(NodeId id) const;

 private:
  const Group* group_;
  std::vector<CyclicNode> nodes_;
  std::vector<NodeId> node_of_;
  std::vector<std::vector<NodeId>> above_;
  std::vector<std::vector<NodeId>> below_;
};

inline CyclicPoset cyclic_poset(const Group& g) { return CyclicPoset(g); }

struct GraphLimits {
  std::size_t max_vertices = 300'000;
  std::size_t max_entries = std::size_t{1} << 27;
};

/// P*(G) with its directed variant, stored as sorted adjacency lists indexed
/// by element index. The identity (index 0) is not a vertex and has empty
/// lists.
class ReducedPowerGraph {
 public:
  ReducedPowerGraph(const Group& g, std::vector<std::vector<Index>> arcs);

  const Group& group() const noexcept { return *group_; }
  /// Non-identity element indices, increasing.
  std::vector<Index> vertices() const;
  std::size_t vertex_count() const noexcept { return group_->order() - 1; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Index> neighbors(Index v) const { return neighbors_[v]; }
  /// Targets u -> v with v a power of u, v != u.
  std::span<const Index> arcs(Index v) const { return arcs_[v]; }
  bool adjacent(Index u, Index v) const;
  bool has_arc(Index u, Index v) const;

 private:
  const Group* group_;
  std::vector<std::vector<Index>> arcs_;
  std::vector<std::vector<Index>> neighbors_;
  std::size_t edge_count_ = 0;
};

/// Built from the poset: u ~ v iff <u> and <v> are comparable.
ReducedPowerGraph reduced_power_graph(const CyclicPoset& poset, const GraphLimits& limits = {});

/// Built from explicit powers of every element, independent of the poset.
ReducedPowerGraph power_graph_by_powers(const Group& g, const GraphLimits& limits = {});

/// Vertices generating the same cyclic subgroup, one class per non-trivial
/// node, in node order.
std::vector<std::vector<Index>> mutual_generator_classes(const CyclicPoset& poset);

std::string to_dot(const ReducedPowerGraph& graph);
void export_dot(const ReducedPowerGraph& graph, const std::filesystem::path& path);
/// {"vertices":[{"index","order"}...],"edges":[[u,v]...]} with u < v, sorted.
std::string to_json(const ReducedPowerGraph& graph);
void export_json(const ReducedPowerGraph& graph, const std::filesystem::path& path);

}  // namespace powerclaw
