#include "powerclaw/structure.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "powerclaw/kernels.hpp"
#include "powerclaw/numtheory.hpp"

namespace powerclaw {

Subgroup::Subgroup(const Group& g) : group_(&g), bits_((g.order() + 63) / 64, 0) { insert(Group::identity()); }

Subgroup Subgroup::whole(const Group& g) {
  Subgroup h(g);
  h.members_.resize(g.order());
  std::iota(h.members_.begin(), h.members_.end(), Index{0});
  std::fill(h.bits_.begin(), h.bits_.end(), ~std::uint64_t{0});
  if (g.order() % 64 != 0) h.bits_.back() = (std::uint64_t{1} << (g.order() % 64)) - 1;
  h.generators_.assign(g.generators().begin(), g.generators().end());
  return h;
}

Subgroup Subgroup::generated_by(const Group& g, std::span<const Index> generators) {
  Subgroup h(g);
  for (Index x : generators) h.add_generator(x);
  return h;
}

void Subgroup::insert(Index i) {
  bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
  members_.push_back(i);
}

std::vector<Index> Subgroup::sorted_members() const {
  std::vector<Index> out = members_;
  std::sort(out.begin(), out.end());
  return out;
}

bool Subgroup::add_generator(Index x) {
  if (contains(x)) return false;
  generators_.push_back(x);
  const Group& g = *group_;
  const std::size_t old = members_.size();
  for (std::size_t pos = 0; pos < old; ++pos) {
    const Index y = g.mul(members_[pos], x);
    if (!contains(y)) insert(y);
  }
  for (std::size_t pos = old; pos < members_.size(); ++pos) {
    for (std::size_t s = 0; s < generators_.size(); ++s) {
      const Index y = g.mul(members_[pos], generators_[s]);
      if (!contains(y)) insert(y);
    }
  }
  return true;
}

std::uint64_t element_order(const Group& g, Index i) { return g.element_order(i); }

OrderSpectrum order_spectrum(const Group& g) {
  OrderSpectrum out;
  for (std::uint32_t o : kernels::parallel::element_orders(g)) ++out[o];
  return out;
}

OrderSpectrum order_spectrum(const Subgroup& h) {
  OrderSpectrum out;
  for (Index x : h.members()) ++out[h.group().element_order(x)];
  return out;
}

Subgroup center(const Group& g) {
  Subgroup z(g);
  const auto gens = g.generators();
  for (Index x = 1; x < g.order(); ++x) {
    if (z.contains(x)) continue;
    const bool central =
        std::all_of(gens.begin(), gens.end(), [&](Index s) { return g.mul(x, s) == g.mul(s, x); });
    if (central) z.add_generator(x);
  }
  return z;
}

Subgroup centralizer(const Group& g, Index i) {
  Subgroup c(g);
  for (Index x : kernels::parallel::centralizer(g, i)) c.add_generator(x);
  return c;
}

Subgroup centralizer(const Subgroup& h, Index i) {
  const Group& g = h.group();
  Subgroup c(g);
  for (Index x : h.sorted_members()) {
    if (!c.contains(x) && g.mul(x, i) == g.mul(i, x)) c.add_generator(x);
  }
  return c;
}

bool is_abelian(const Subgroup& h) {
  const Group& g = h.group();
  const auto gens = h.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (g.mul(gens[a], gens[b]) != g.mul(gens[b], gens[a])) return false;
    }
  }
  return true;
}

bool is_abelian(const Group& g) { return is_abelian(Subgroup::whole(g)); }

Index commutator(const Group& g, Index a, Index b) { return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)); }

Subgroup normal_closure(const Group& g, std::span<const Index> generators, std::span<const Index> conjugators) {
  Subgroup n(g);
  for (Index x : generators) n.add_generator(x);
  for (std::size_t k = 0; k < n.generators().size(); ++k) {
    const Index x = n.generators()[k];
    for (Index s : conjugators) {
      const Index c = g.mul(g.mul(g.inv(s), x), s);
      n.add_generator(c);
    }
  }
  return n;
}

Subgroup derived_subgroup(const Subgroup& h) {
  const Group& g = h.group();
  const std::vector<Index> gens(h.generators().begin(), h.generators().end());
  std::vector<Index> comms;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) comms.push_back(commutator(g, gens[a], gens[b]));
  }
  return normal_closure(g, comms, gens);
}

std::vector<Subgroup> lower_central_series(const Group& g) {
  std::vector<Subgroup> series{Subgroup::whole(g)};
  const std::vector<Index> gens(g.generators().begin(), g.generators().end());
  while (true) {
    std::vector<Index> comms;
    for (Index x : series.back().generators()) {
      for (Index s : gens) comms.push_back(commutator(g, x, s));
    }
    Subgroup next = normal_closure(g, comms, gens);
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
    if (series.back().order() == 1) break;
  }
  return series;
}

bool is_solvable(const Subgroup& h) {
  Subgroup cur = h;
  while (cur.order() > 1) {
    Subgroup next = derived_subgroup(cur);
    if (next.order() == cur.order()) return false;
    cur = std::move(next);
  }
  return true;
}

bool is_solvable(const Group& g) { return is_solvable(Subgroup::whole(g)); }

bool is_nilpotent(const Group& g) { return lower_central_series(g).back().order() == 1; }

std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (const auto& [o, count] : order_spectrum(g)) e = std::lcm(e, o);
  return e;
}

bool is_eppo(const Group& g) {
  for (const auto& [o, count] : order_spectrum(g)) {
    if (o > 1 && !is_prime_power(o)) return false;
  }
  return true;
}

namespace {

bool is_power_of_prime(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Subgroup sylow_subgroup(const Subgroup& h, std::uint64_t p) {
  if (!is_prime(p) || h.order() % p != 0) {
    throw std::invalid_argument("sylow_subgroup: " + std::to_string(p) + " is not a prime dividing the order");
  }
  const Group& g = h.group();
  const std::uint64_t target = p_part(h.order(), p);
  const auto members = h.sorted_members();

  Index start = Group::identity();
  std::uint64_t best = 1;
  for (Index x : members) {
    const std::uint64_t o = g.element_order(x);
    if (o > best && is_power_of_prime(o, p)) {
      best = o;
      start = x;
    }
  }
  Subgroup sylow(g);
  sylow.add_generator(start);

  while (sylow.order() < target) {
    bool grown = false;
    for (Index y : members) {
      if (sylow.contains(y) || !is_power_of_prime(g.element_order(y), p)) continue;
      const Index y_inv = g.inv(y);
      const auto gens = sylow.generators();
      const bool normalizes = std::all_of(gens.begin(), gens.end(),
                                          [&](Index z) { return sylow.contains(g.mul(g.mul(y_inv, z), y)); });
      if (normalizes) {
        sylow.add_generator(y);
        grown = true;
        break;
      }
    }
    if (!grown) throw std::logic_error("sylow_subgroup: no normalizing p-element found");
  }
  return sylow;
}

Subgroup sylow_subgroup(const Group& g, std::uint64_t p) { return sylow_subgroup(Subgroup::whole(g), p); }

bool is_cyclic(const Subgroup& h) {
  const Group& g = h.group();
  for (Index x : h.members()) {
    if (g.element_order(x) == h.order()) return true;
  }
  return false;
}

bool is_cyclic(const Group& g) {
  for (Index x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == g.order()) return true;
  }
  return false;
}

bool is_normal_in(const Subgroup& n, const Subgroup& h) {
  const Group& g = n.group();
  for (Index s : h.generators()) {
    for (Index x : n.generators()) {
      if (!n.contains(g.mul(g.mul(g.inv(s), x), s))) return false;
    }
  }
  return true;
}

bool is_normal(const Subgroup& n) { return is_normal_in(n, Subgroup::whole(n.group())); }

bool is_p_group(std::uint64_t order) { return order == 1 || is_prime_power(order).has_value(); }

bool is_dihedral(const Group& g) {
  const std::uint64_t n = g.order();
  if (n < 4 || n % 2 != 0) return false;
  for (Index r = 1; r < g.order(); ++r) {
    if (g.element_order(r) != n / 2) continue;
    const Subgroup rot = Subgroup::generated_by(g, std::span<const Index>(&r, 1));
    bool ok = true;
    for (Index x = 0; x < g.order() && ok; ++x) {
      if (!rot.contains(x) && g.element_order(x) != 2) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

std::vector<Index> prime_order_class_representatives(const Group& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Index> reps;
  const auto gens = g.generators();
  std::vector<Index> orbit;
  for (Index i = 1; i < g.order(); ++i) {
    if (seen[i] || !is_prime(g.element_order(i))) continue;
    reps.push_back(i);
    seen[i] = true;
    orbit.assign(1, i);
    for (std::size_t pos = 0; pos < orbit.size(); ++pos) {
      for (Index s : gens) {
        const Index c = g.mul(g.mul(g.inv(s), orbit[pos]), s);
        if (!seen[c]) {
          seen[c] = true;
          orbit.push_back(c);
        }
      }
    }
  }
  return reps;
}

}  // namespace powerclaw
