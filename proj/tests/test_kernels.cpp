#include <gtest/gtest.h>

#include "powerclaw/group_spec.hpp"
#include "powerclaw/kernels.hpp"
#include "powerclaw/power_graph.hpp"

using namespace powerclaw;

namespace {

const char* kGroups[] = {"C(60)", "Q(32)", "C(2)xD(6)", "PSL(2,7)", "SL(2,5)", "M11", "Semi(91,6,43)", "PSL(2,16)"};

class JobsGuard {
 public:
  explicit JobsGuard(int jobs) : saved_(kernels::jobs()) { kernels::set_jobs(jobs); }
  ~JobsGuard() { kernels::set_jobs(saved_); }

 private:
  int saved_;
};

}  // namespace

class KernelEquivalence : public ::testing::TestWithParam<int> {};

TEST_P(KernelEquivalence, SerialMatchesParallel) {
  JobsGuard guard(GetParam());
  for (const char* spec : kGroups) {
    const Group g = build_group(spec);
    SCOPED_TRACE(spec);
    EXPECT_EQ(kernels::serial::element_orders(g), kernels::parallel::element_orders(g));
    for (Index x : {Index{0}, Index{1}, g.order() / 2, g.order() - 1}) {
      EXPECT_EQ(kernels::serial::centralizer(g, x), kernels::parallel::centralizer(g, x));
    }
    const auto s = kernels::serial::cyclic_subgroups(g);
    const auto p = kernels::parallel::cyclic_subgroups(g);
    ASSERT_EQ(s.size(), p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_EQ(s[i].generator, p[i].generator);
      EXPECT_EQ(s[i].powers, p[i].powers);
    }
    EXPECT_EQ(kernels::serial::power_arcs(g), kernels::parallel::power_arcs(g));
    for (std::uint64_t m : {2u, 4u, 6u}) {
      EXPECT_EQ(kernels::serial::square_root_counts(g, m), kernels::parallel::square_root_counts(g, m));
    }

    const CyclicPoset serial_poset(g, CyclicPoset::Strategy::Serial);
    const CyclicPoset parallel_poset(g, CyclicPoset::Strategy::Parallel);
    ASSERT_EQ(serial_poset.size(), parallel_poset.size());
    for (NodeId i = 0; i < serial_poset.size(); ++i) {
      EXPECT_EQ(serial_poset.node(i).members, parallel_poset.node(i).members);
    }
    const auto a = kernels::serial::second_type_search(parallel_poset);
    const auto b = kernels::parallel::second_type_search(parallel_poset);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(a->base, b->base);
      EXPECT_EQ(a->nodes, b->nodes);
    }
    if (g.order() <= 5000) {
      const auto graph = power_graph_by_powers(g);
      const auto c = kernels::serial::brute_claw_search(graph);
      const auto d = kernels::parallel::brute_claw_search(graph);
      ASSERT_EQ(c.has_value(), d.has_value());
      if (c) {
        EXPECT_EQ(c->center, d->center);
        EXPECT_EQ(c->pendants, d->pendants);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Jobs, KernelEquivalence, ::testing::Values(1, 2, 4));

TEST(Kernels, JobsSetting) {
  JobsGuard guard(3);
  EXPECT_EQ(kernels::jobs(), 3);
}
