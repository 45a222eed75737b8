#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "powerclaw/group.hpp"

namespace powerclaw {

/// Left regular representation of an abstract group on codes [0, order):
/// generator s acts by x -> mul(s, x).
Group regular_group(std::uint32_t order, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul,
                    std::span<const std::uint32_t> generator_codes, const GroupLimits& limits, std::string label);

/// C_n as the rotation of n points.
Group cyclic(std::uint64_t n, const GroupLimits& limits = {});

/// G x H acting on the disjoint union of their domains.
Group direct_product(const Group& g, const Group& h, const GroupLimits& limits = {});

/// Dihedral group of order n (n even, n >= 4).
Group dihedral(std::uint64_t n, const GroupLimits& limits = {});

/// Generalized quaternion group of order n (n a power of 2, n >= 8).
Group generalized_quaternion(std::uint64_t n, const GroupLimits& limits = {});

/// <a, b | a^(n/2), b^2, a^b = a^(n/4 - 1)> of order n (n a power of 2, n >= 16).
Group semidihedral(std::uint64_t n, const GroupLimits& limits = {});

/// <a, b | a^8, b^2, a^b = a^5>.
Group modular16(const GroupLimits& limits = {});

/// Non-abelian group of order p^3, p odd: exponent p (Heisenberg) for
/// exponent_flag 1, C_{p^2} x| C_p with a -> a^(p+1) for exponent_flag 2.
Group extraspecial_p3(std::uint64_t p, int exponent_flag, const GroupLimits& limits = {});

/// C_n x| C_m with (a, b)(c, d) = (a + c k^b mod n, b + d mod m).
/// Requires gcd(k, n) = 1 and k^m = 1 mod n.
Group semidirect_cyclic(std::uint64_t n, std::uint64_t m, std::uint64_t k, const GroupLimits& limits = {});

/// Smallest k in [1, n) with gcd(k^b - 1, n) = 1 for 0 < b < m and k^m = 1
/// mod n, so that C_m acts fixed-point-freely on C_n. nullopt if none.
std::optional<std::uint64_t> auto_action_exponent(std::uint64_t n, std::uint64_t m);

/// (C_p)^k.
Group elementary_abelian(std::uint64_t p, unsigned k, const GroupLimits& limits = {});

/// Sylow 2-subgroup model of Sz(q), q = 2^(2k+1), k >= 1: pairs over GF(q)
/// with (a, b)(c, d) = (a + c, b + d + theta(a) c).
Group suzuki_2group(std::uint64_t q, const GroupLimits& limits = {});

/// PSL(2, q) on the q + 1 points of the projective line.
Group psl2(std::uint64_t q, const GroupLimits& limits = {});
/// SL(2, q) on the q^2 - 1 nonzero vectors of GF(q)^2.
Group sl2(std::uint64_t q, const GroupLimits& limits = {});
/// PSL(3, q), q in {3, 4}, on the q^2 + q + 1 projective points.
Group psl3(std::uint64_t q, const GroupLimits& limits = {});
/// PSU(3, 3) on the 28 isotropic points of the Hermitian form over GF(9).
Group psu3_3(const GroupLimits& limits = {});
/// Mathieu group M11 on 11 points.
Group m11(const GroupLimits& limits = {});
/// AGL(3, 2) on the 8 points of GF(2)^3.
Group agl3_2(const GroupLimits& limits = {});

}  // namespace powerclaw
