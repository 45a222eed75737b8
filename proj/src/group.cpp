#include "powerclaw/group.hpp"

#include <algorithm>
#include <numeric>

namespace powerclaw {

namespace {

constexpr Index kEmptySlot = ~Index{0};

std::uint64_t hash_points(std::span<const Point> p) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Point x : p) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return h ^ (h >> 29);
}

bool same_points(std::span<const Point> a, std::span<const Point> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Permutation compose(std::span<const Point> a, std::span<const Point> b) {
  Permutation r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

Permutation inverse(std::span<const Point> a) {
  Permutation r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[a[x]] = static_cast<Point>(x);
  return r;
}

Permutation identity_permutation(std::size_t n) {
  Permutation r(n);
  std::iota(r.begin(), r.end(), Point{0});
  return r;
}

bool is_bijection(std::span<const Point> p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Point x : p) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::optional<Index> Group::probe(std::span<const Point> image, std::uint64_t hash) const {
  for (std::uint64_t slot = hash & slot_mask_;; slot = (slot + 1) & slot_mask_) {
    const Index idx = slots_[slot];
    if (idx == kEmptySlot) return std::nullopt;
    if (same_points(perm(idx), image)) return idx;
  }
}

std::optional<Index> Group::find(std::span<const Point> image) const {
  if (image.size() != degree_ || slots_.empty()) return std::nullopt;
  return probe(image, hash_points(image));
}

void Group::rebuild_lookup() {
  std::size_t cap = 16;
  while (cap < 2 * static_cast<std::size_t>(order_)) cap <<= 1;
  slots_.assign(cap, kEmptySlot);
  slot_mask_ = cap - 1;
  for (Index i = 0; i < order_; ++i) {
    std::uint64_t slot = hash_points(perm(i)) & slot_mask_;
    while (slots_[slot] != kEmptySlot) slot = (slot + 1) & slot_mask_;
    slots_[slot] = i;
  }
}

Index Group::mul(Index a, Index b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  thread_local Permutation buffer;
  buffer.resize(degree_);
  const auto pa = perm(a);
  const auto pb = perm(b);
  for (std::size_t x = 0; x < degree_; ++x) buffer[x] = pa[pb[x]];
  const auto found = probe(buffer, hash_points(buffer));
  if (!found) throw std::logic_error("group is not closed under multiplication");
  return *found;
}

Index Group::pow(Index a, std::uint64_t k) const {
  Index result = identity();
  Index base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

std::vector<Permutation> Group::generator_permutations() const {
  std::vector<Permutation> out;
  out.reserve(generators_.size());
  for (Index g : generators_) {
    const auto p = perm(g);
    out.emplace_back(p.begin(), p.end());
  }
  return out;
}

std::uint64_t Group::element_order(Index i) const {
  const auto p = perm(i);
  std::vector<bool> seen(degree_, false);
  std::uint64_t result = 1;
  for (std::size_t start = 0; start < degree_; ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Group closure(std::size_t domain_size, std::span<const Permutation> generators, const GroupLimits& limits,
              std::string label) {
  if (domain_size == 0 || domain_size > kMaxDegree) {
    throw std::invalid_argument("closure: domain size must be in [1, 65535]");
  }
  for (const auto& g : generators) {
    if (!is_bijection(g, domain_size)) throw std::invalid_argument("closure: generator is not a bijection");
  }
  const Permutation id = identity_permutation(domain_size);
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g != id && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  const std::size_t ngens = gens.size();

  Group g;
  g.degree_ = domain_size;
  g.label_ = std::move(label);

  // Breadth-first enumeration under right multiplication by generators.
  // Each new element e = parent[e] * gens[via[e]].
  std::vector<Index> parent{0};
  std::vector<std::uint32_t> via{0};
  std::vector<Index> right;
  g.images_ = id;
  g.order_ = 1;
  g.rebuild_lookup();

  Permutation buffer(domain_size);
  for (Index e = 0; e < g.order_; ++e) {
    for (std::size_t s = 0; s < ngens; ++s) {
      const Point* pe = g.images_.data() + static_cast<std::size_t>(e) * domain_size;
      for (std::size_t x = 0; x < domain_size; ++x) buffer[x] = pe[gens[s][x]];
      const std::uint64_t h = hash_points(buffer);
      auto found = g.probe(buffer, h);
      if (!found) {
        if (static_cast<std::size_t>(g.order_) + 1 > limits.max_order ||
            (static_cast<std::size_t>(g.order_) + 1) * domain_size > limits.max_storage) {
          throw CapExceeded("group closure exceeds the element cap of " + std::to_string(limits.max_order) +
                            " (or storage cap); increase --max-order");
        }
        g.images_.insert(g.images_.end(), buffer.begin(), buffer.end());
        parent.push_back(e);
        via.push_back(static_cast<std::uint32_t>(s));
        found = g.order_++;
        if (2 * static_cast<std::size_t>(g.order_) > g.slots_.size()) {
          g.rebuild_lookup();
        } else {
          std::uint64_t slot = h & g.slot_mask_;
          while (g.slots_[slot] != kEmptySlot) slot = (slot + 1) & g.slot_mask_;
          g.slots_[slot] = *found;
        }
      }
      right.push_back(*found);
    }
  }

  const Index n = g.order_;
  std::vector<Index> sorted(n);
  std::iota(sorted.begin(), sorted.end(), Index{0});
  std::sort(sorted.begin(), sorted.end(), [&](Index a, Index b) {
    const auto pa = g.perm(a);
    const auto pb = g.perm(b);
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
  });
  std::vector<Index> rank(n);
  for (Index i = 0; i < n; ++i) rank[sorted[i]] = i;

  std::vector<Point> images(static_cast<std::size_t>(n) * domain_size);
  for (Index i = 0; i < n; ++i) {
    const auto src = g.perm(sorted[i]);
    std::copy(src.begin(), src.end(), images.begin() + static_cast<std::size_t>(i) * domain_size);
  }
  g.images_ = std::move(images);
  g.rebuild_lookup();

  g.right_.assign(static_cast<std::size_t>(n) * ngens, 0);
  for (Index e = 0; e < n; ++e) {
    for (std::size_t s = 0; s < ngens; ++s) {
      g.right_[static_cast<std::size_t>(rank[e]) * ngens + s] = rank[right[static_cast<std::size_t>(e) * ngens + s]];
    }
  }
  for (std::size_t s = 0; s < ngens; ++s) g.generators_.push_back(rank[right[s]]);

  g.inverse_.resize(n);
  for (Index i = 0; i < n; ++i) {
    const auto inv = inverse(g.perm(i));
    const auto found = g.find(inv);
    if (!found) throw std::logic_error("closure: inverse missing");
    g.inverse_[i] = *found;
  }

  if (n <= kCayleyTableMaxOrder) {
    // Fill rows in discovery order: a * e = (a * parent(e)) * gen(e).
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    for (Index a = 0; a < n; ++a) {
      std::uint16_t* row = table.data() + static_cast<std::size_t>(a) * n;
      row[0] = static_cast<std::uint16_t>(a);
      for (Index old = 1; old < n; ++old) {
        const Index prev = row[rank[parent[old]]];
        row[rank[old]] = static_cast<std::uint16_t>(g.right_[static_cast<std::size_t>(prev) * ngens + via[old]]);
      }
    }
    g.table_ = std::move(table);
  }
  return g;
}

}  // namespace powerclaw
