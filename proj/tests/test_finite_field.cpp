#include <gtest/gtest.h>

#include "powerclaw/finite_field.hpp"
#include "powerclaw/numtheory.hpp"

using namespace powerclaw;

namespace {

std::vector<FiniteField> small_fields() {
  std::vector<FiniteField> out;
  for (std::uint32_t q = 2; q <= 81; ++q) {
    const auto pp = is_prime_power(q);
    if (pp) out.emplace_back(static_cast<std::uint32_t>(pp->prime), pp->exponent);
  }
  return out;
}

}  // namespace

TEST(FiniteField, AxiomsExhaustiveUpTo81) {
  for (const auto& F : small_fields()) {
    const std::uint32_t q = F.size();
    SCOPED_TRACE("q=" + std::to_string(q));
    std::vector<FieldElement> el;
    for (std::uint32_t c = 0; c < q; ++c) {
      el.push_back(F.decode(c));
      ASSERT_EQ(F.encode(el.back()), c);
    }
    for (const auto& a : el) {
      ASSERT_EQ(F.add(a, F.zero()), a);
      ASSERT_EQ(F.mul(a, F.one()), a);
      ASSERT_TRUE(F.is_zero(F.add(a, F.neg(a))));
      if (!F.is_zero(a)) {
        ASSERT_EQ(F.mul(a, F.inv(a)), F.one());
      }
      for (const auto& b : el) {
        ASSERT_EQ(F.add(a, b), F.add(b, a));
        ASSERT_EQ(F.mul(a, b), F.mul(b, a));
        ASSERT_EQ(F.sub(F.add(a, b), b), a);
        if (!F.is_zero(a) && !F.is_zero(b)) {
          ASSERT_FALSE(F.is_zero(F.mul(a, b)));
        }
        for (const auto& c : el) {
          ASSERT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
          ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
          ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
  }
}

TEST(FiniteField, MultiplicativeGroupIsCyclic) {
  for (std::uint32_t q = 2; q <= 256; ++q) {
    const auto pp = is_prime_power(q);
    if (!pp) continue;
    const FiniteField F(static_cast<std::uint32_t>(pp->prime), pp->exponent);
    bool found = false;
    for (std::uint32_t c = 1; c < q && !found; ++c) found = F.multiplicative_order(F.decode(c)) == q - 1;
    EXPECT_TRUE(found) << q;
  }
}

TEST(FiniteField, PowAndCharacteristic) {
  const FiniteField F(3, 4);
  EXPECT_EQ(F.size(), 81u);
  for (std::uint32_t c = 0; c < F.size(); ++c) {
    const auto a = F.decode(c);
    ASSERT_EQ(F.pow(a, 81), a);
    ASSERT_TRUE(F.is_zero(F.add(F.add(a, a), a)));
  }
  EXPECT_EQ(F.from_int(-1), F.neg(F.one()));
  EXPECT_EQ(F.from_int(4), F.one());
}

TEST(FiniteField, ModulusIsIrreducibleAndSmallest) {
  const FiniteField F(2, 6);
  EXPECT_TRUE(is_irreducible(F.modulus(), 2));
  // x^6 + x^5 + 1, cross-checked with an external CAS.
  EXPECT_EQ(F.modulus(), (std::vector<std::uint16_t>{1, 0, 0, 0, 0, 1, 1}));
  EXPECT_FALSE(is_irreducible({1, 0, 1}, 2));  // x^2 + 1 = (x + 1)^2
  EXPECT_TRUE(is_irreducible({1, 1, 1}, 2));
  EXPECT_FALSE(is_irreducible({1, 0, 1}, 5));  // x^2 + 1 has roots 2, 3
  EXPECT_TRUE(is_irreducible({1, 0, 1}, 7));
}

TEST(FiniteField, Errors) {
  EXPECT_THROW(FiniteField(4, 1), std::invalid_argument);
  EXPECT_THROW(FiniteField(2, 0), std::invalid_argument);
  EXPECT_THROW(FiniteField(2, 17), std::invalid_argument);
  const FiniteField F(5, 1);
  EXPECT_THROW(F.inv(F.zero()), std::domain_error);
}

TEST(FiniteField, SuzukiTwistSquaresToFrobenius) {
  for (unsigned f : {3u, 5u, 7u}) {
    const FiniteField F(2, f);
    for (std::uint32_t c = 0; c < F.size(); ++c) {
      const auto a = F.decode(c);
      ASSERT_EQ(suzuki_twist(F, suzuki_twist(F, a)), F.mul(a, a));
      const auto b = F.decode((c * 7 + 3) % F.size());
      ASSERT_EQ(suzuki_twist(F, F.mul(a, b)), F.mul(suzuki_twist(F, a), suzuki_twist(F, b)));
      ASSERT_EQ(suzuki_twist(F, F.add(a, b)), F.add(suzuki_twist(F, a), suzuki_twist(F, b)));
    }
  }
  EXPECT_THROW(suzuki_twist(FiniteField(2, 4), FiniteField(2, 4).one()), std::invalid_argument);
  EXPECT_THROW(suzuki_twist(FiniteField(3, 3), FiniteField(3, 3).one()), std::invalid_argument);
}
