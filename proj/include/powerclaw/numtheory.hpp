#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace powerclaw {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Exact prime factorization; primes strictly increasing, product equals n.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;

  std::vector<std::uint64_t> primes() const;
};

/// Position of an integer relative to the set of prime powers and
/// (prime) * (prime power) numbers. Only the two middle tags are "in Omega".
enum class OmegaClass { Unit, PrimePower, PrimeTimesPrimePower, Other };

std::string_view to_string(OmegaClass c);

/// Throws std::invalid_argument for n == 0 or n >= 2^63.
Factorization factorize(std::uint64_t n);

OmegaClass omega_class(std::uint64_t n);
bool in_omega(std::uint64_t n);
bool in_omega(OmegaClass c);

std::size_t distinct_prime_count(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// (p, f) with p^f == n, or nullopt. n < 2 yields nullopt.
std::optional<PrimePower> is_prime_power(std::uint64_t n);

/// Claw-freeness of P*(PSL(2,q)) decided arithmetically: both (q-1)/d and
/// (q+1)/d lie in Omega, d = gcd(q-1, 2). Throws for q < 4 or q not a prime
/// power.
bool psl2_clawfree_predicate(std::uint64_t q);

std::uint64_t euler_phi(std::uint64_t n);

/// All positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Largest divisor of n that is a power of p.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Multiplicative order of k modulo n; 0 when gcd(k, n) != 1.
std::uint64_t multiplicative_order(std::uint64_t k, std::uint64_t n);

/// Integer power with overflow detection; nullopt on overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

}  // namespace powerclaw
