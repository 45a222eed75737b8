#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "oracles.hpp"
#include "powerclaw/catalog.hpp"
#include "powerclaw/families.hpp"
#include "powerclaw/group_spec.hpp"
#include "powerclaw/numtheory.hpp"
#include "powerclaw/power_graph.hpp"

using namespace powerclaw;

namespace {

std::set<std::vector<Index>> oracle_cyclic_subgroups(const Group& g) {
  std::set<std::vector<Index>> out;
  for (Index i = 0; i < g.order(); ++i) out.insert(oracle::cyclic_span(g, i));
  return out;
}

}  // namespace

TEST(CyclicPoset, NodesMatchOracle) {
  for (const char* spec : {"C(1)", "C(30)", "D(12)", "Q(16)", "PSL(2,7)", "SL(2,3)", "C(4)xC(4)", "X(3,2)",
                           "Semi(91,6,43)", "E(2,4)", "AGL(3,2)"}) {
    const Group g = build_group(spec);
    const CyclicPoset poset(g);
    std::set<std::vector<Index>> got;
    for (const auto& node : poset.nodes()) got.insert(node.members);
    EXPECT_EQ(got, oracle_cyclic_subgroups(g)) << spec;
    EXPECT_EQ(got.size(), poset.size()) << spec;
  }
}

TEST(CyclicPoset, KnownCounts) {
  for (std::uint64_t n : {1, 2, 12, 30, 64, 360, 997}) {
    EXPECT_EQ(CyclicPoset(cyclic(n)).size(), divisors(n).size()) << n;
  }
  // 1 + 21 + 28 + 21 + 8
  EXPECT_EQ(CyclicPoset(psl2(7)).size(), 79u);
  // 1 + 15 involutions + 10 order-3 + 6 order-5
  EXPECT_EQ(CyclicPoset(psl2(4)).size(), 32u);
}

TEST(CyclicPoset, PSL2_64) {
  const Group g = psl2(64);
  const CyclicPoset poset(g);
  // 1 + 4095 involutions + 2080 subgroups of order 3 * 5 cyclic orders dividing
  // 63 + 2016 subgroups of order 65 * 3 non-trivial divisors.
  EXPECT_EQ(poset.size(), 20544u);
}

TEST(CyclicPoset, OrderingAndContainment) {
  for (const char* spec : {"PSL(2,7)", "Q(32)", "C(2)xD(6)", "SL(2,5)", "Semi(13,4,5)"}) {
    const Group g = build_group(spec);
    const CyclicPoset poset(g);
    SCOPED_TRACE(spec);
    EXPECT_EQ(poset.node(CyclicPoset::trivial()).order, 1u);
    for (NodeId a = 0; a < poset.size(); ++a) {
      const auto& na = poset.node(a);
      EXPECT_EQ(na.members.size(), na.order);
      EXPECT_EQ(poset.generators_of(a).size(), euler_phi(na.order));
      for (Index x : poset.generators_of(a)) EXPECT_EQ(poset.node_of(x), a);
      if (a > 0) {
        const auto& prev = poset.node(a - 1);
        EXPECT_TRUE(std::pair(prev.order, prev.generator) < std::pair(na.order, na.generator));
      }
      for (NodeId b = 0; b < poset.size(); ++b) {
        const auto& nb = poset.node(b);
        const bool incl = std::includes(na.members.begin(), na.members.end(), nb.members.begin(),
                                                  nb.members.end());
        ASSERT_EQ(poset.contains(a, b), incl) << a << " " << b;
      }
      std::vector<NodeId> above;
      for (NodeId b = 0; b < poset.size(); ++b) {
        if (b != a && poset.contains(b, a)) above.push_back(b);
      }
      EXPECT_EQ(std::vector<NodeId>(poset.above(a).begin(), poset.above(a).end()), above);
      for (std::uint64_t d : divisors(na.order)) {
        const auto sub = poset.subgroup_of_order(a, d);
        ASSERT_TRUE(sub.has_value());
        EXPECT_EQ(poset.node(*sub).order, d);
        EXPECT_TRUE(*sub == a || poset.contains(a, *sub));
      }
      EXPECT_FALSE(poset.subgroup_of_order(a, na.order + 1).has_value());
    }
  }
}

TEST(ReducedPowerGraph, BothConstructionsAgreeOverCatalog) {
  for (const auto& spec : default_catalog()) {
    const Group g = build_group(spec);
    if (g.order() > 5000) continue;
    SCOPED_TRACE(spec);
    const CyclicPoset poset(g);
    const auto a = reduced_power_graph(poset);
    const auto b = power_graph_by_powers(g);
    ASSERT_EQ(a.edge_count(), b.edge_count());
    for (Index v = 0; v < g.order(); ++v) {
      ASSERT_TRUE(std::equal(a.neighbors(v).begin(), a.neighbors(v).end(), b.neighbors(v).begin(),
                             b.neighbors(v).end()));
      ASSERT_TRUE(std::equal(a.arcs(v).begin(), a.arcs(v).end(), b.arcs(v).begin(), b.arcs(v).end()));
    }
  }
}

TEST(ReducedPowerGraph, DefinitionOnSmallGroups) {
  for (const char* spec : {"C(12)", "D(10)", "Q(8)", "SL(2,3)", "PSL(2,4)", "C(3)xSemi(7,3,2)"}) {
    const Group g = build_group(spec);
    const auto graph = power_graph_by_powers(g);
    SCOPED_TRACE(spec);
    EXPECT_TRUE(graph.neighbors(0).empty());
    EXPECT_EQ(graph.vertex_count(), g.order() - 1u);
    std::size_t edges = 0;
    for (Index u = 1; u < g.order(); ++u) {
      const auto su = oracle::cyclic_span(g, u);
      for (Index v = 1; v < g.order(); ++v) {
        const auto sv = oracle::cyclic_span(g, v);
        const bool v_in_u = std::binary_search(su.begin(), su.end(), v);
        const bool u_in_v = std::binary_search(sv.begin(), sv.end(), u);
        ASSERT_EQ(graph.has_arc(u, v), u != v && v_in_u);
        ASSERT_EQ(graph.adjacent(u, v), u != v && (v_in_u || u_in_v));
        ASSERT_EQ(graph.adjacent(u, v), graph.adjacent(v, u));
        edges += u < v && graph.adjacent(u, v);
      }
    }
    EXPECT_EQ(graph.edge_count(), edges);
  }
}

TEST(ReducedPowerGraph, MutualGeneratorClasses) {
  const Group g = build_group("C(2)xC(6)");
  const CyclicPoset poset(g);
  const auto classes = mutual_generator_classes(poset);
  ASSERT_EQ(classes.size(), poset.size() - 1);
  std::size_t covered = 0;
  for (const auto& c : classes) covered += c.size();
  EXPECT_EQ(covered, g.order() - 1u);
  const auto graph = reduced_power_graph(poset);
  for (const auto& c : classes) {
    for (Index x : c) {
      for (Index y : c) {
        if (x != y) {
          EXPECT_TRUE(graph.has_arc(x, y) && graph.has_arc(y, x));
        }
      }
    }
  }
}

TEST(ReducedPowerGraph, Caps) {
  GraphLimits limits;
  limits.max_vertices = 10;
  EXPECT_THROW(power_graph_by_powers(cyclic(12), limits), CapExceeded);
  EXPECT_THROW(reduced_power_graph(CyclicPoset(cyclic(12)), limits), CapExceeded);
  EXPECT_NO_THROW(power_graph_by_powers(cyclic(11), limits));
  GraphLimits storage;
  storage.max_entries = 100;
  EXPECT_THROW(power_graph_by_powers(cyclic(97), storage), CapExceeded);
}

namespace {

std::size_t count_substr(const std::string& s, const std::string& pat) {
  std::size_t n = 0;
  for (auto pos = s.find(pat); pos != std::string::npos; pos = s.find(pat, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Export, Dot) {
  const auto c6 = to_dot(power_graph_by_powers(build_group("C(6)")));
  EXPECT_EQ(count_substr(c6, "[label="), 5u);
  // Every pair except the involution with either element of order 3.
  EXPECT_EQ(count_substr(c6, " -- "), 8u);
  EXPECT_EQ(c6.rfind("graph \"C(6)\" {", 0), 0u);

  const auto e4 = to_dot(power_graph_by_powers(build_group("E(2,2)")));
  EXPECT_EQ(count_substr(e4, "[label=\"2\"]"), 3u);
  EXPECT_EQ(count_substr(e4, " -- "), 0u);

  EXPECT_EQ(count_substr(to_dot(power_graph_by_powers(build_group("Q(8)"))), "[label="), 7u);
}

TEST(Export, JsonAndFiles) {
  const Group g = build_group("Q(8)");
  const auto graph = power_graph_by_powers(g);
  const auto doc = nlohmann::json::parse(to_json(graph));
  EXPECT_EQ(doc["vertices"].size(), 7u);
  EXPECT_EQ(doc["edges"].size(), graph.edge_count());
  for (const auto& e : doc["edges"]) {
    const Index u = e[0], v = e[1];
    EXPECT_LT(u, v);
  }

  const auto dir = std::filesystem::temp_directory_path() / "powerclaw_export_test";
  std::filesystem::create_directories(dir);
  export_dot(graph, dir / "q8.dot");
  export_json(graph, dir / "q8.json");
  std::ifstream in(dir / "q8.dot");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, to_dot(graph));
  EXPECT_THROW(export_dot(graph, dir / "missing" / "x.dot"), std::runtime_error);
  std::filesystem::remove_all(dir);
}
