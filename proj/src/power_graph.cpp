#include "powerclaw/power_graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "powerclaw/numtheory.hpp"

namespace powerclaw {

CyclicPoset::CyclicPoset(const Group& g, Strategy strategy) : group_(&g) {
  auto records = strategy == Strategy::Serial ? kernels::serial::cyclic_subgroups(g)
                                              : kernels::parallel::cyclic_subgroups(g);
  std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.generator < b.generator;
  });

  node_of_.assign(g.order(), 0);
  nodes_.reserve(records.size());
  for (std::size_t id = 0; id < records.size(); ++id) {
    auto& rec = records[id];
    const std::uint64_t n = rec.order();
    for (std::uint64_t k = 0; k < n; ++k) {
      if (std::gcd(k, n) == 1) node_of_[rec.powers[k]] = static_cast<NodeId>(id);
    }
    CyclicNode node;
    node.generator = rec.generator;
    node.order = n;
    node.members = rec.powers;
    std::sort(node.members.begin(), node.members.end());
    nodes_.push_back(std::move(node));
  }

  above_.assign(nodes_.size(), {});
  below_.assign(nodes_.size(), {});
  for (std::size_t id = 0; id < records.size(); ++id) {
    const auto& rec = records[id];
    const std::uint64_t n = rec.order();
    for (std::uint64_t d : divisors(n)) {
      const NodeId sub = node_of_[rec.powers[n / d % n]];
      nodes_[id].subgroups.emplace_back(d, sub);
      if (d < n) {
        below_[id].push_back(sub);
        above_[sub].push_back(static_cast<NodeId>(id));
      }
    }
  }
  for (auto& v : above_) std::sort(v.begin(), v.end());
  for (auto& v : below_) std::sort(v.begin(), v.end());
}

std::optional<NodeId> CyclicPoset::subgroup_of_order(NodeId id, std::uint64_t d) const {
  const auto& subs = nodes_[id].subgroups;
  auto it = std::lower_bound(subs.begin(), subs.end(), d, [](const auto& e, std::uint64_t v) { return e.first < v; });
  if (it == subs.end() || it->first != d) return std::nullopt;
  return it->second;
}

bool CyclicPoset::contains(NodeId big, NodeId small) const {
  const auto sub = subgroup_of_order(big, nodes_[small].order);
  return sub && *sub == small;
}

std::vector<Index> CyclicPoset::generators_of(NodeId id) const {
  std::vector<Index> out;
  for (Index x : nodes_[id].members) {
    if (node_of_[x] == id) out.push_back(x);
  }
  return out;
}

ReducedPowerGraph::ReducedPowerGraph(const Group& g, std::vector<std::vector<Index>> arcs)
    : group_(&g), arcs_(std::move(arcs)) {
  const Index n = g.order();
  if (arcs_.size() != n) throw std::invalid_argument("ReducedPowerGraph: one arc list per element required");
  std::vector<std::size_t> indeg(n, 0);
  for (Index u = 0; u < n; ++u) {
    for (Index v : arcs_[u]) ++indeg[v];
  }
  neighbors_.resize(n);
  for (Index u = 0; u < n; ++u) neighbors_[u].reserve(arcs_[u].size() + indeg[u]);
  for (Index u = 0; u < n; ++u) {
    for (Index v : arcs_[u]) {
      neighbors_[u].push_back(v);
      neighbors_[v].push_back(u);
    }
  }
  for (auto& row : neighbors_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    row.shrink_to_fit();
    edge_count_ += row.size();
  }
  edge_count_ /= 2;
}

std::vector<Index> ReducedPowerGraph::vertices() const {
  std::vector<Index> out(vertex_count());
  std::iota(out.begin(), out.end(), Index{1});
  return out;
}

bool ReducedPowerGraph::adjacent(Index u, Index v) const {
  return std::binary_search(neighbors_[u].begin(), neighbors_[u].end(), v);
}

bool ReducedPowerGraph::has_arc(Index u, Index v) const {
  return std::binary_search(arcs_[u].begin(), arcs_[u].end(), v);
}

namespace {

void check_graph_size(std::size_t vertices, std::size_t entries, const GraphLimits& limits) {
  if (vertices > limits.max_vertices) {
    throw CapExceeded("power graph has " + std::to_string(vertices) + " vertices, above the cap of " +
                      std::to_string(limits.max_vertices) + "; increase --max-graph-vertices");
  }
  if (entries > limits.max_entries) {
    throw CapExceeded("power graph has " + std::to_string(entries) + " arcs, above the storage cap of " +
                      std::to_string(limits.max_entries));
  }
}

}  // namespace

ReducedPowerGraph reduced_power_graph(const CyclicPoset& poset, const GraphLimits& limits) {
  const Group& g = poset.group();
  std::size_t entries = 0;
  for (const auto& node : poset.nodes()) {
    if (node.order > 1) entries += euler_phi(node.order) * (node.order - 2);
  }
  check_graph_size(g.order() - 1, entries, limits);

  // Every generator u of a node points at all other non-identity members.
  std::vector<std::vector<Index>> arcs(g.order());
  for (NodeId id = 1; id < poset.size(); ++id) {
    const auto& members = poset.node(id).members;
    for (Index u : poset.generators_of(id)) {
      auto& row = arcs[u];
      row.reserve(members.size() - 2);
      for (Index v : members) {
        if (v != u && v != Group::identity()) row.push_back(v);
      }
    }
  }
  return ReducedPowerGraph(g, std::move(arcs));
}

ReducedPowerGraph power_graph_by_powers(const Group& g, const GraphLimits& limits) {
  const auto orders = kernels::parallel::element_orders(g);
  std::size_t entries = 0;
  for (Index i = 1; i < g.order(); ++i) entries += orders[i] - 2;
  check_graph_size(g.order() - 1, entries, limits);
  return ReducedPowerGraph(g, kernels::parallel::power_arcs(g));
}

std::vector<std::vector<Index>> mutual_generator_classes(const CyclicPoset& poset) {
  std::vector<std::vector<Index>> out;
  for (NodeId id = 1; id < poset.size(); ++id) out.push_back(poset.generators_of(id));
  return out;
}

std::string to_dot(const ReducedPowerGraph& graph) {
  const Group& g = graph.group();
  std::ostringstream os;
  os << "graph \"" << g.label() << "\" {\n";
  for (Index v = 1; v < g.order(); ++v) os << "  " << v << " [label=\"" << g.element_order(v) << "\"];\n";
  for (Index u = 1; u < g.order(); ++u) {
    for (Index v : graph.neighbors(u)) {
      if (u < v) os << "  " << u << " -- " << v << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

void export_dot(const ReducedPowerGraph& graph, const std::filesystem::path& path) { write_text(path, to_dot(graph)); }

std::string to_json(const ReducedPowerGraph& graph) {
  const Group& g = graph.group();
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (Index v = 1; v < g.order(); ++v) vertices.push_back({{"index", v}, {"order", g.element_order(v)}});
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (Index u = 1; u < g.order(); ++u) {
    for (Index v : graph.neighbors(u)) {
      if (u < v) edges.push_back({u, v});
    }
  }
  nlohmann::ordered_json doc;
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  return doc.dump();
}

void export_json(const ReducedPowerGraph& graph, const std::filesystem::path& path) {
  write_text(path, to_json(graph) + "\n");
}

}  // namespace powerclaw
