#include <gtest/gtest.h>

#include "oracles.hpp"
#include "powerclaw/catalog.hpp"
#include "powerclaw/claw.hpp"
#include "powerclaw/families.hpp"
#include "powerclaw/group_spec.hpp"
#include "powerclaw/kernels.hpp"
#include "powerclaw/numtheory.hpp"

using namespace powerclaw;

namespace {

// Naive induced K_{1,3} search with adjacency from explicit cyclic spans.
bool naive_has_claw(const Group& g) {
  const Index n = g.order();
  std::vector<std::vector<Index>> span(n);
  for (Index i = 1; i < n; ++i) span[i] = oracle::cyclic_span(g, i);
  auto adj = [&](Index u, Index v) {
    return u != v && (std::binary_search(span[u].begin(), span[u].end(), v) ||
                      std::binary_search(span[v].begin(), span[v].end(), u));
  };
  for (Index c = 1; c < n; ++c) {
    std::vector<Index> nb;
    for (Index v = 1; v < n; ++v) {
      if (adj(c, v)) nb.push_back(v);
    }
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (adj(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (!adj(nb[i], nb[k]) && !adj(nb[j], nb[k])) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

TEST(Claw, NaiveOracleAgreesWithBothRoutes) {
  for (const auto& spec : default_catalog()) {
    const Group g = build_group(spec);
    if (g.order() > 128) continue;
    SCOPED_TRACE(spec);
    const bool claw = naive_has_claw(g);
    EXPECT_EQ(find_claw_fast(CyclicPoset(g)).has_value(), claw);
    EXPECT_EQ(find_claw_brute(power_graph_by_powers(g)).has_value(), claw);
  }
}

TEST(Claw, WitnessesValidateOverCatalog) {
  for (const auto& spec : default_catalog()) {
    const Group g = build_group(spec);
    if (g.order() > 5000) continue;
    SCOPED_TRACE(spec);
    const auto fast = find_claw_fast(CyclicPoset(g));
    const auto brute = find_claw_brute(power_graph_by_powers(g));
    ASSERT_EQ(fast.has_value(), brute.has_value());
    for (const auto& w : {fast, brute}) {
      if (!w) continue;
      EXPECT_NE(w->kind, ClawKind::Mixed);
      EXPECT_TRUE(validate_witness(g, *w));
      EXPECT_EQ(arc_kind(g, w->center, w->pendants), w->kind);
      EXPECT_TRUE(std::is_sorted(w->pendants.begin(), w->pendants.end()));
    }
  }
}

TEST(Claw, FirstTypePendantPatterns) {
  {
    const Group g = cyclic(30);
    const auto w = find_claw_fast(CyclicPoset(g));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->kind, ClawKind::First);
    EXPECT_EQ(g.element_order(w->center), 30u);
    std::vector<std::uint64_t> orders;
    for (Index p : w->pendants) orders.push_back(g.element_order(p));
    std::sort(orders.begin(), orders.end());
    EXPECT_EQ(orders, (std::vector<std::uint64_t>{6, 10, 15}));  // g^5, g^3, g^2
  }
  {
    const Group g = cyclic(36);
    const auto w = find_claw_fast(CyclicPoset(g));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->kind, ClawKind::First);
    const Index c = w->center;
    std::vector<Index> want{g.pow(c, 4), g.pow(c, 9), g.pow(c, 6)};
    std::sort(want.begin(), want.end());
    EXPECT_EQ(std::vector<Index>(w->pendants.begin(), w->pendants.end()), want);
  }
}

TEST(Claw, Examples) {
  const ClawDecision psl27 = is_claw_free(psl2(7));
  EXPECT_TRUE(psl27.claw_free);
  EXPECT_TRUE(psl27.validated);
  EXPECT_FALSE(psl27.witness);

  const ClawDecision q16 = is_claw_free(generalized_quaternion(16));
  EXPECT_FALSE(q16.claw_free);
  ASSERT_TRUE(q16.witness);
  EXPECT_EQ(q16.witness->kind, ClawKind::Second);

  EXPECT_TRUE(is_claw_free(dihedral(16)).claw_free);
  EXPECT_TRUE(is_claw_free(build_group("C(4)xC(4)")).claw_free);
  EXPECT_TRUE(is_claw_free(build_group("C(4)xC(2)")).claw_free);
  EXPECT_FALSE(is_claw_free(build_group("C(8)xC(2)")).claw_free);
  EXPECT_FALSE(is_claw_free(build_group("Semi(91,6,43)")).claw_free);
  EXPECT_EQ(is_claw_free(build_group("Semi(91,6,43)")).witness->kind, ClawKind::First);
}

TEST(Claw, FastPathOnlyAboveValidationCap) {
  ClawOptions opts;
  opts.validation_max_vertices = 50;
  const auto free = is_claw_free(psl2(7), opts);
  EXPECT_TRUE(free.claw_free);
  EXPECT_TRUE(free.fast_path_only);
  EXPECT_FALSE(free.validated);
  const auto claw = is_claw_free(build_group("Q(64)"), opts);
  EXPECT_FALSE(claw.claw_free);
  EXPECT_FALSE(claw.fast_path_only);
  EXPECT_TRUE(claw.validated);
}

TEST(Claw, ValidateRejectsBadWitnesses) {
  const Group g = generalized_quaternion(16);
  auto w = *find_claw_fast(CyclicPoset(g));
  ASSERT_TRUE(validate_witness(g, w));
  ClawWitness bad = w;
  bad.kind = ClawKind::First;
  EXPECT_FALSE(validate_witness(g, bad));
  bad = w;
  bad.pendants[1] = bad.pendants[0];
  EXPECT_FALSE(validate_witness(g, bad));
  bad = w;
  bad.center = 0;
  EXPECT_FALSE(validate_witness(g, bad));
  bad = w;
  bad.pendants[2] = g.pow(bad.pendants[0], 3);  // adjacent to pendant 0
  EXPECT_FALSE(validate_witness(g, bad));
}

TEST(Claw, WitnessDeterministicAcrossJobs) {
  const int saved = kernels::jobs();
  std::vector<std::optional<ClawWitness>> seen;
  for (int jobs : {1, 2, 3}) {
    kernels::set_jobs(jobs);
    for (const char* spec : {"M11", "PSL(3,3)", "C(2)xC(8)xC(3)"}) {
      const Group g = build_group(spec);
      seen.push_back(find_claw_fast(CyclicPoset(g)));
      seen.push_back(find_claw_brute(power_graph_by_powers(g)));
    }
  }
  kernels::set_jobs(saved);
  for (std::size_t i = 6; i < seen.size(); ++i) EXPECT_EQ(seen[i], seen[i % 6]) << i;
}

namespace {

Index first_of_order(const Group& g, std::uint64_t n) {
  for (Index i = 0; i < g.order(); ++i) {
    if (g.element_order(i) == n) return i;
  }
  throw std::logic_error("no element of that order");
}

}  // namespace

TEST(Claw, OvergroupAndSquareRootCounts) {
  {
    const Group g = m11();
    const CyclicPoset poset(g);
    EXPECT_EQ(count_cyclic_overgroups(poset, first_of_order(g, 2), 4), 3u);
  }
  {
    const Group g = build_group("C(4)xC(4)");
    const CyclicPoset poset(g);
    for (Index i = 1; i < g.order(); ++i) {
      if (g.element_order(i) == 2) {
        EXPECT_EQ(count_cyclic_overgroups(poset, i, 4), 2u);
      }
    }
  }
  {
    const Group g = psu3_3();
    EXPECT_EQ(count_cyclic_overgroups(CyclicPoset(g), first_of_order(g, 2), 4), 4u);
  }
  EXPECT_EQ(count_square_roots(psl3(4), first_of_order(psl3(4), 2), 4), 12u);
  const Group q8 = generalized_quaternion(8);
  EXPECT_EQ(count_square_roots(q8, first_of_order(q8, 2), 4), 6u);
  const Group c4 = cyclic(4);
  const Index gen = first_of_order(c4, 4);
  EXPECT_EQ(count_square_roots(c4, c4.mul(gen, gen), 4), 2u);
  EXPECT_EQ(count_cyclic_overgroups(CyclicPoset(c4), 0, 4), 1u);
}

TEST(Claw, WitnessJson) {
  const Group g = generalized_quaternion(16);
  const auto w = *find_claw_fast(CyclicPoset(g));
  const auto j = witness_json(g, w);
  EXPECT_EQ(j["kind"], "SECOND");
  EXPECT_EQ(j["center"]["index"], w.center);
  EXPECT_EQ(j["center"]["order"], 2u);
  ASSERT_EQ(j["pendants"].size(), 3u);
  for (const auto& p : j["pendants"]) EXPECT_EQ(p["order"], 4u);
  EXPECT_EQ(to_string(ClawKind::First), "FIRST");
  EXPECT_EQ(to_string(ClawKind::Mixed), "MIXED");
}
