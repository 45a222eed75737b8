#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace powerclaw {

using Point = std::uint16_t;
using Index = std::uint32_t;
using Permutation = std::vector<Point>;

inline constexpr std::size_t kMaxDegree = 65535;
inline constexpr Index kCayleyTableMaxOrder = 4096;

/// Raised when a construction or analysis would exceed a configured limit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupLimits {
  std::size_t max_order = 1'000'000;
  /// Upper bound on order * degree, i.e. stored permutation points.
  std::size_t max_storage = std::size_t{1} << 28;
};

/// (a * b)[x] = a[b[x]]: b is applied first.
Permutation compose(std::span<const Point> a, std::span<const Point> b);
Permutation inverse(std::span<const Point> a);
Permutation identity_permutation(std::size_t n);
bool is_bijection(std::span<const Point> p, std::size_t n);

class Group;

/// Enumerates the subgroup of Sym(domain_size) generated by `generators`.
/// Throws std::invalid_argument for non-bijective generators and
/// CapExceeded when the group outgrows `limits`.
Group closure(std::size_t domain_size, std::span<const Permutation> generators,
              const GroupLimits& limits = {}, std::string label = {});

/// Fully enumerated permutation group. Elements are sorted by permutation
/// image, so index 0 is the identity and equal groups built twice index
/// identically. Immutable once built; safe to share between threads.
class Group {
 public:
  Group() = default;

  Index order() const noexcept { return order_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  static constexpr Index identity() noexcept { return 0; }

  std::span<const Point> perm(Index i) const {
    return {images_.data() + static_cast<std::size_t>(i) * degree_, degree_};
  }

  /// Product a*b, b applied first as a function.
  Index mul(Index a, Index b) const;
  Index inv(Index a) const { return inverse_[a]; }
  Index pow(Index a, std::uint64_t k) const;
  /// a*s for the s-th generator; O(1).
  Index mul_generator(Index a, std::size_t s) const { return right_[static_cast<std::size_t>(a) * generators_.size() + s]; }

  std::optional<Index> find(std::span<const Point> image) const;

  /// Indices of the generating permutations the group was closed from.
  std::span<const Index> generators() const noexcept { return generators_; }
  std::vector<Permutation> generator_permutations() const;

  /// Order of element i, computed as the lcm of its cycle lengths.
  std::uint64_t element_order(Index i) const;

  bool has_cayley_table() const noexcept { return !table_.empty(); }

 private:
  friend Group closure(std::size_t, std::span<const Permutation>, const GroupLimits&, std::string);

  void rebuild_lookup();
  std::optional<Index> probe(std::span<const Point> image, std::uint64_t hash) const;

  Index order_ = 0;
  std::size_t degree_ = 0;
  std::string label_;
  std::vector<Point> images_;
  std::vector<Index> slots_;
  std::uint64_t slot_mask_ = 0;
  std::vector<Index> inverse_;
  std::vector<Index> generators_;
  std::vector<Index> right_;
  std::vector<std::uint16_t> table_;
};

}  // namespace powerclaw
