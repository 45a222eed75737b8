#include "powerclaw/finite_field.hpp"

#include <stdexcept>
#include <string>

#include "powerclaw/numtheory.hpp"

namespace powerclaw {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor, in place.
void reduce_monic(Poly& a, const Poly& monic, std::uint32_t p) {
  const std::size_t dm = monic.size() - 1;
  trim(a);
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - (lead * monic[i]) % p) % p);
    }
    trim(a);
  }
}

}  // namespace

bool is_irreducible(const std::vector<std::uint16_t>& poly, std::uint32_t p) {
  const std::size_t deg = poly.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  const Poly target(poly.begin(), poly.end());
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // every monic polynomial of degree d: low coefficients enumerated as a base-p counter
    Poly divisor(d + 1, 0);
    divisor[d] = 1;
    while (true) {
      Poly rem = target;
      reduce_monic(rem, divisor, p);
      if (rem.empty()) return false;
      std::size_t i = 0;
      while (i < d && ++divisor[i] == p) divisor[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, unsigned f) : p_(p), f_(f), q_(0) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (f == 0) throw std::invalid_argument("field degree must be at least 1");
  const auto q = checked_pow(p, f);
  if (!q || *q > kMaxFieldSize) {
    throw std::invalid_argument("field size " + std::to_string(p) + "^" + std::to_string(f) + " exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(*q);

  // Candidate (c0, ..., c_{f-1}) enumerated lexicographically with c0 most significant.
  std::vector<std::uint16_t> cand(f + 1, 0);
  cand[f] = 1;
  while (true) {
    if (is_irreducible(cand, p)) break;
    int i = static_cast<int>(f) - 1;
    while (i >= 0 && ++cand[i] == p) cand[i--] = 0;
    if (i < 0) throw std::logic_error("no irreducible polynomial found");
  }
  modulus_ = cand;
}

FieldElement FiniteField::one() const {
  FieldElement e;
  e.coeffs[0] = 1;
  return e;
}

FieldElement FiniteField::basis(unsigned i) const {
  if (i >= f_) throw std::out_of_range("basis index out of range");
  if (f_ == 1) return one();
  FieldElement e;
  e.coeffs[i] = 1;
  return e;
}

FieldElement FiniteField::from_int(std::int64_t v) const {
  FieldElement e;
  const std::int64_t m = static_cast<std::int64_t>(p_);
  e.coeffs[0] = static_cast<std::uint16_t>(((v % m) + m) % m);
  return e;
}

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r;
  for (unsigned i = 0; i < f_; ++i) r.coeffs[i] = static_cast<std::uint16_t>((a.coeffs[i] + b.coeffs[i]) % p_);
  return r;
}

FieldElement FiniteField::neg(const FieldElement& a) const {
  FieldElement r;
  for (unsigned i = 0; i < f_; ++i) r.coeffs[i] = static_cast<std::uint16_t>((p_ - a.coeffs[i]) % p_);
  return r;
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
  Poly prod(2 * f_, 0);
  for (unsigned i = 0; i < f_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < f_; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<std::uint32_t>(a.coeffs[i]) * b.coeffs[j]) % p_;
    }
  }
  const Poly monic(modulus_.begin(), modulus_.end());
  reduce_monic(prod, monic, p_);
  FieldElement r;
  for (std::size_t i = 0; i < prod.size(); ++i) r.coeffs[i] = static_cast<std::uint16_t>(prod[i]);
  return r;
}

FieldElement FiniteField::pow(const FieldElement& a, std::uint64_t k) const {
  FieldElement result = one();
  FieldElement base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FieldElement FiniteField::inv(const FieldElement& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero field element");
  return pow(a, q_ - 2);
}

std::uint32_t FiniteField::encode(const FieldElement& a) const {
  std::uint32_t code = 0;
  for (unsigned i = f_; i-- > 0;) code = code * p_ + a.coeffs[i];
  return code;
}

FieldElement FiniteField::decode(std::uint32_t code) const {
  if (code >= q_) throw std::out_of_range("field element code out of range");
  FieldElement e;
  for (unsigned i = 0; i < f_; ++i) {
    e.coeffs[i] = static_cast<std::uint16_t>(code % p_);
    code /= p_;
  }
  return e;
}

std::uint64_t FiniteField::multiplicative_order(const FieldElement& a) const {
  if (is_zero(a)) throw std::domain_error("multiplicative order of zero");
  for (std::uint64_t d : divisors(q_ - 1)) {
    if (pow(a, d) == one()) return d;
  }
  return q_ - 1;
}

FiniteField make_field(std::uint32_t p, unsigned f) { return FiniteField(p, f); }

FieldElement suzuki_twist(const FiniteField& field, const FieldElement& a) {
  const unsigned f = field.degree();
  if (field.characteristic() != 2 || f % 2 == 0 || f < 3) {
    throw std::invalid_argument("suzuki twist needs GF(2^(2k+1)) with k >= 1");
  }
  const unsigned k = (f - 1) / 2;
  return field.pow(a, std::uint64_t{1} << (k + 1));
}

}  // namespace powerclaw
