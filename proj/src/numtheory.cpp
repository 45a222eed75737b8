#include "powerclaw/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace powerclaw {

namespace {

constexpr std::uint64_t kMaxInput = (std::uint64_t{1} << 63) - 1;

// Trial divisors after 2, 3, 5: offsets of the residues coprime to 30.
constexpr std::uint64_t kWheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};

void take_prime(std::uint64_t& n, std::uint64_t p, std::vector<PrimePower>& out) {
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (e > 0) out.push_back({p, e});
}

}  // namespace

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

std::string_view to_string(OmegaClass c) {
  switch (c) {
    case OmegaClass::Unit:
      return "UNIT";
    case OmegaClass::PrimePower:
      return "PRIME_POWER";
    case OmegaClass::PrimeTimesPrimePower:
      return "PRIME_TIMES_PRIME_POWER";
    case OmegaClass::Other:
      return "OTHER";
  }
  return "OTHER";
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  if (n > kMaxInput) throw std::invalid_argument("factorize: n exceeds 2^63-1");
  Factorization result;
  result.n = n;
  take_prime(n, 2, result.factors);
  take_prime(n, 3, result.factors);
  take_prime(n, 5, result.factors);
  std::uint64_t d = 7;
  for (std::size_t w = 0; d <= n / d; d += kWheel[w], w = (w + 1) % 8) {
    take_prime(n, d, result.factors);
  }
  if (n > 1) result.factors.push_back({n, 1});
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

std::optional<PrimePower> is_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const auto f = factorize(n);
  if (f.factors.size() != 1) return std::nullopt;
  return f.factors[0];
}

OmegaClass omega_class(std::uint64_t n) {
  const auto f = factorize(n);
  switch (f.factors.size()) {
    case 0:
      return OmegaClass::Unit;
    case 1:
      return OmegaClass::PrimePower;
    case 2:
      if (std::min(f.factors[0].exponent, f.factors[1].exponent) == 1) {
        return OmegaClass::PrimeTimesPrimePower;
      }
      return OmegaClass::Other;
    default:
      return OmegaClass::Other;
  }
}

bool in_omega(OmegaClass c) {
  return c == OmegaClass::PrimePower || c == OmegaClass::PrimeTimesPrimePower;
}

bool in_omega(std::uint64_t n) { return in_omega(omega_class(n)); }

std::size_t distinct_prime_count(std::uint64_t n) { return factorize(n).factors.size(); }

bool psl2_clawfree_predicate(std::uint64_t q) {
  if (q < 4) throw std::invalid_argument("psl2 predicate: q must be at least 4");
  if (!is_prime_power(q)) {
    throw std::invalid_argument("psl2 predicate: q = " + std::to_string(q) +
                                " is not a prime power");
  }
  const std::uint64_t d = std::gcd(q - 1, std::uint64_t{2});
  return in_omega((q - 1) / d) && in_omega((q + 1) / d);
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& f : factorize(n).factors) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& f : factorize(n).factors) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(k, n) != 1) return 0;
  const std::uint64_t phi = euler_phi(n);
  for (std::uint64_t d : divisors(phi)) {
    if (pow_mod(k, d, n) == 1) return d;
  }
  return phi;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    r *= base;
  }
  return r;
}

}  // namespace powerclaw
