#include <gtest/gtest.h>

#include "oracles.hpp"
#include "powerclaw/families.hpp"
#include "powerclaw/group_spec.hpp"
#include "powerclaw/numtheory.hpp"
#include "powerclaw/structure.hpp"

using namespace powerclaw;
using Spectrum = std::map<std::uint64_t, std::uint64_t>;

TEST(Families, Orders) {
  const std::vector<std::pair<std::string, std::uint64_t>> cases = {
      {"C(1)", 1},         {"C(97)", 97},          {"D(4)", 4},          {"D(256)", 256},      {"Q(8)", 8},
      {"SD(64)", 64},      {"Mod16", 16},          {"E(3,4)", 81},       {"X(5,1)", 125},      {"X(7,2)", 343},
      {"Semi(91,6,auto)", 546}, {"Sz2(8)", 64},    {"Sz2(32)", 1024},    {"SL(2,5)", 120},     {"PSL(2,4)", 60},
      {"PSL(2,5)", 60},    {"PSL(2,9)", 360},      {"PSL(2,16)", 4080},  {"PSL(2,27)", 9828},  {"PSL(3,3)", 5616},
      {"PSL(3,4)", 20160}, {"PSU(3,3)", 6048},     {"M11", 7920},        {"AGL(3,2)", 1344},   {"C(2)xPSL(2,7)", 336},
  };
  for (const auto& [spec, order] : cases) EXPECT_EQ(build_group(spec).order(), order) << spec;
}

// Spectra below are the standard counts; the oracle recomputes them from
// raw permutations rather than through the group's tables.
TEST(Families, SpectraAgainstRawPermutations) {
  const std::vector<std::pair<std::string, Spectrum>> cases = {
      {"D(8)", {{1, 1}, {2, 5}, {4, 2}}},
      {"Q(8)", {{1, 1}, {2, 1}, {4, 6}}},
      {"Q(16)", {{1, 1}, {2, 1}, {4, 10}, {8, 4}}},
      {"SD(16)", {{1, 1}, {2, 5}, {4, 6}, {8, 4}}},
      {"Mod16", {{1, 1}, {2, 3}, {4, 4}, {8, 8}}},
      {"X(3,1)", {{1, 1}, {3, 26}}},
      {"X(3,2)", {{1, 1}, {3, 8}, {9, 18}}},
      {"PSL(2,4)", {{1, 1}, {2, 15}, {3, 20}, {5, 24}}},
      {"PSL(2,7)", {{1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}}},
      {"SL(2,3)", {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}},
      {"Sz2(8)", {{1, 1}, {2, 7}, {4, 56}}},
      {"M11", {{1, 1}, {2, 165}, {3, 440}, {4, 990}, {5, 1584}, {6, 1320}, {8, 1980}, {11, 1440}}},
  };
  for (const auto& [spec, want] : cases) {
    const Group g = build_group(spec);
    EXPECT_EQ(oracle::spectrum(g), want) << spec;
    EXPECT_EQ(order_spectrum(g), want) << spec;
  }
}

TEST(Families, SemidirectAction) {
  const Group g = semidirect_cyclic(7, 3, 2);
  EXPECT_EQ(g.order(), 21u);
  EXPECT_EQ(order_spectrum(g), (Spectrum{{1, 1}, {3, 14}, {7, 6}}));
  EXPECT_FALSE(is_abelian(g));
  // k = 1 is the direct product.
  EXPECT_TRUE(is_cyclic(semidirect_cyclic(7, 3, 1)));
}

TEST(Families, AutoActionExponentAgainstLoop) {
  auto oracle_k = [](std::uint64_t n, std::uint64_t m) -> std::optional<std::uint64_t> {
    for (std::uint64_t k = 2; k < n; ++k) {
      if (pow_mod(k, m, n) != 1) continue;
      bool ok = true;
      std::uint64_t kb = 1;
      for (std::uint64_t b = 1; b < m && ok; ++b) {
        kb = kb * k % n;
        ok = std::gcd((kb + n - 1) % n, n) == 1;
      }
      if (ok) return k;
    }
    return std::nullopt;
  };
  for (auto [n, m] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {7, 3}, {91, 6}, {341, 10}, {1891, 15}, {5, 4}, {13, 4}, {11, 5}, {4, 2}}) {
    EXPECT_EQ(auto_action_exponent(n, m), oracle_k(n, m)) << n << "," << m;
  }
  EXPECT_EQ(auto_action_exponent(91, 6), std::optional<std::uint64_t>{10});
  EXPECT_EQ(auto_action_exponent(1891, 15), std::optional<std::uint64_t>{76});
}

TEST(Families, DirectProductLabelAndOrder) {
  const Group g = direct_product(cyclic(4), dihedral(6));
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(center(g).order(), 4u);
}

TEST(Families, ParameterErrors) {
  for (const char* spec : {"D(5)", "D(2)", "Q(12)", "Q(4)", "SD(8)", "Semi(7,3,3)", "X(2,1)", "X(3,3)", "E(2,0)",
                           "Sz2(4)", "Sz2(2)", "PSL(2,6)", "PSL(3,5)", "SL(2,6)", "C(0)", "Semi(4,2,auto)"}) {
    EXPECT_THROW(build_group(spec), std::invalid_argument) << spec;
  }
}

TEST(Families, CapsApply) {
  GroupLimits limits;
  limits.max_order = 1000;
  EXPECT_THROW(m11(limits), CapExceeded);
  EXPECT_THROW(build_group("C(10)xC(101)", limits), CapExceeded);
  EXPECT_NO_THROW(build_group("C(10)xC(100)", limits));
}
