#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "powerclaw/group.hpp"

namespace powerclaw {

/// element order -> number of elements of that order
using OrderSpectrum = std::map<std::uint64_t, std::uint64_t>;

/// Subgroup of an enumerated group, kept as a membership bitmap over the
/// parent's indices plus a member list in discovery order.
class Subgroup {
 public:
  /// Trivial subgroup.
  explicit Subgroup(const Group& g);

  static Subgroup whole(const Group& g);
  static Subgroup generated_by(const Group& g, std::span<const Index> generators);

  const Group& group() const noexcept { return *group_; }
  std::uint64_t order() const noexcept { return members_.size(); }
  bool contains(Index i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }
  std::span<const Index> members() const noexcept { return members_; }
  std::vector<Index> sorted_members() const;
  /// Irredundant: each generator was outside the group spanned by the
  /// previous ones.
  std::span<const Index> generators() const noexcept { return generators_; }

  /// Extends to <H, x>. Returns false if x was already a member.
  bool add_generator(Index x);

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.bits_ == b.bits_; }

 private:
  void insert(Index i);

  const Group* group_;
  std::vector<std::uint64_t> bits_;
  std::vector<Index> members_;
  std::vector<Index> generators_;
};

std::uint64_t element_order(const Group& g, Index i);
OrderSpectrum order_spectrum(const Group& g);
OrderSpectrum order_spectrum(const Subgroup& h);

Subgroup center(const Group& g);
Subgroup centralizer(const Group& g, Index i);
/// Elements of h commuting with i.
Subgroup centralizer(const Subgroup& h, Index i);

bool is_abelian(const Group& g);
bool is_abelian(const Subgroup& h);

/// a^-1 b^-1 a b
Index commutator(const Group& g, Index a, Index b);

/// Smallest subgroup containing `generators` normalized by `conjugators`.
Subgroup normal_closure(const Group& g, std::span<const Index> generators, std::span<const Index> conjugators);

Subgroup derived_subgroup(const Subgroup& h);
/// G = G_1 > G_2 = [G_1, G] > ... until it stabilizes.
std::vector<Subgroup> lower_central_series(const Group& g);
bool is_solvable(const Group& g);
bool is_solvable(const Subgroup& h);
bool is_nilpotent(const Group& g);

std::uint64_t exponent(const Group& g);
/// Every non-identity element has prime-power order.
bool is_eppo(const Group& g);

/// Throws std::invalid_argument unless p is a prime dividing |h|.
Subgroup sylow_subgroup(const Subgroup& h, std::uint64_t p);
Subgroup sylow_subgroup(const Group& g, std::uint64_t p);

bool is_cyclic(const Group& g);
bool is_cyclic(const Subgroup& h);
/// n normalized by the generators of h (n inside h assumed).
bool is_normal_in(const Subgroup& n, const Subgroup& h);
bool is_normal(const Subgroup& n);
bool is_p_group(std::uint64_t order);
/// Dihedral of order >= 4 (Klein four included).
bool is_dihedral(const Group& g);

/// One representative (smallest index) per conjugacy class among the
/// elements of prime order, increasing.
std::vector<Index> prime_order_class_representatives(const Group& g);

}  // namespace powerclaw
