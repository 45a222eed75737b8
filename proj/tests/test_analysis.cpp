#include <gtest/gtest.h>

#include "powerclaw/analysis.hpp"
#include "powerclaw/group.hpp"

using namespace powerclaw;

TEST(Analysis, Examples) {
  const auto c44 = analyze("C(4)xC(4)");
  EXPECT_TRUE(c44.decision.claw_free);
  EXPECT_TRUE(c44.witness.is_null());
  EXPECT_EQ(c44.cyclic_nodes, 10u);

  const auto q16 = analyze("Q(16)");
  EXPECT_FALSE(q16.decision.claw_free);
  EXPECT_EQ(q16.witness["kind"], "SECOND");

  const auto psl = analyze("PSL(2,11)");
  EXPECT_TRUE(psl.decision.claw_free);
  EXPECT_EQ(psl.order, 660u);
  EXPECT_EQ(psl.pi, 4u);
  EXPECT_FALSE(psl.solvable);
  EXPECT_EQ(factorization_text(psl.factorization), "2^2 * 3 * 5 * 11");
}

TEST(Analysis, JsonDataIsReproducible) {
  const auto a = analysis_json(analyze("Semi(91,6,43)"));
  const auto b = analysis_json(analyze("Semi(91,6,43)"));
  EXPECT_EQ(a["data"].dump(), b["data"].dump());
  EXPECT_EQ(a["data"]["witness"]["kind"], "FIRST");
  EXPECT_TRUE(a["timings"].contains("claw"));
  std::vector<std::string> keys;
  for (const auto& [k, v] : a["data"].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"label", "order", "factorization", "pi", "spectrum", "nilpotent",
                                            "solvable", "exponent", "eppo", "cyclic_nodes", "claw_free", "witness",
                                            "validated", "fast_path_only"}));
}

TEST(Analysis, CapsAndText) {
  AnalysisOptions o;
  o.limits.max_order = 100;
  EXPECT_THROW(analyze("PSL(2,7)", o), CapExceeded);
  o.limits.max_order = 1000;
  o.validation_max_vertices = 100;
  const auto r = analyze("PSL(2,7)", o);
  EXPECT_TRUE(r.decision.fast_path_only);
  EXPECT_NE(analysis_text(r).find("fast path only"), std::string::npos);
  EXPECT_EQ(factorization_text(Factorization{}), "1");
}

TEST(Psl2Scan, Rows) {
  const auto rows = psl2_scan(100);
  // prime powers 4..100
  EXPECT_EQ(rows.size(), 33u);
  auto row = [&](std::uint64_t q) {
    for (const auto& r : rows) {
      if (r.q == q) return r;
    }
    throw std::logic_error("missing row");
  };
  EXPECT_TRUE(row(4).claw_free);
  EXPECT_EQ(row(4).pi, 3u);
  EXPECT_FALSE(row(59).claw_free);
  EXPECT_EQ(row(59).plus, 30u);
  EXPECT_EQ(row(59).plus_class, OmegaClass::Other);
  const auto big = psl2_scan(64);
  EXPECT_TRUE(big.back().claw_free);
  EXPECT_EQ(big.back().q, 64u);
  EXPECT_EQ(big.back().pi, 5u);
  EXPECT_THROW(psl2_scan(1'000'001), std::invalid_argument);
  const auto csv = psl2_scan_csv(psl2_scan(5));
  EXPECT_EQ(csv, "q,d,q_minus_1_over_d,q_plus_1_over_d,minus_class,plus_class,claw_free,pi\n"
                 "4,1,3,5,PRIME_POWER,PRIME_POWER,true,3\n"
                 "5,2,2,3,PRIME_POWER,PRIME_POWER,true,3\n");
  EXPECT_EQ(psl2_scan_json(psl2_scan(5)).size(), 2u);
}

TEST(Psl2Scan, MillionRunsAndPiNeverExceedsFiveWhenClawFree) {
  const auto rows = psl2_scan(1'000'000);
  for (const auto& r : rows) {
    if (r.claw_free) {
      ASSERT_LE(r.pi, 5u) << r.q;
    }
  }
}
