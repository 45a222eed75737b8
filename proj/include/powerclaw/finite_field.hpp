#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace powerclaw {

inline constexpr unsigned kMaxFieldDegree = 16;
inline constexpr std::uint32_t kMaxFieldSize = 1u << 16;

/// Element of GF(p^f) in polynomial basis: coeffs[i] multiplies x^i.
/// Entries at positions >= f are always zero.
struct FieldElement {
  std::array<std::uint16_t, kMaxFieldDegree> coeffs{};

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// GF(p^f) built on the lexicographically smallest monic irreducible
/// polynomial of degree f (coefficients compared from the constant term up).
/// Immutable after construction.
class FiniteField {
 public:
  /// Throws std::invalid_argument if p is not prime, f == 0, or p^f > 2^16.
  FiniteField(std::uint32_t p, unsigned f);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return f_; }
  std::uint32_t size() const noexcept { return q_; }
  /// Monic modulus, coefficients of x^0..x^f.
  const std::vector<std::uint16_t>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const { return {}; }
  FieldElement one() const;
  /// x^i for i < f, the i-th polynomial basis vector.
  FieldElement basis(unsigned i) const;
  FieldElement from_int(std::int64_t v) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  /// Throws std::domain_error for a == 0.
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::uint64_t k) const;

  bool is_zero(const FieldElement& a) const { return a == FieldElement{}; }

  /// Bijection GF(q) <-> [0, q): base-p digits with coeffs[0] least significant.
  std::uint32_t encode(const FieldElement& a) const;
  FieldElement decode(std::uint32_t code) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(const FieldElement& a) const;

 private:
  std::uint32_t p_;
  unsigned f_;
  std::uint32_t q_;
  std::vector<std::uint16_t> modulus_;
};

/// True iff the monic polynomial (coefficients x^0..x^deg) has no monic factor
/// of degree 1..deg/2 over GF(p). Exhaustive trial division.
bool is_irreducible(const std::vector<std::uint16_t>& poly, std::uint32_t p);

FiniteField make_field(std::uint32_t p, unsigned f);

/// The automorphism a -> a^(2^(k+1)) of GF(2^(2k+1)), k >= 1.
/// Throws std::invalid_argument when the field is not of that shape.
FieldElement suzuki_twist(const FiniteField& field, const FieldElement& a);

}  // namespace powerclaw
