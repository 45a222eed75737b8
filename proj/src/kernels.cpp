#include "powerclaw/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <memory>
#include <numeric>

#include "powerclaw/power_graph.hpp"

namespace powerclaw::kernels {

namespace {

int g_jobs = 0;

std::vector<Index> powers_of(const Group& g, Index x) {
  std::vector<Index> out{Group::identity()};
  for (Index y = x; y != Group::identity(); y = g.mul(y, x)) out.push_back(y);
  return out;
}

// Lexicographically smallest pairwise incomparable triple in `cand`
// (sorted ids), or nullopt.
std::optional<std::array<NodeId, 3>> smallest_antichain(const CyclicPoset& poset, std::span<const NodeId> cand) {
  const std::size_t n = cand.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (poset.comparable(cand[i], cand[j])) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!poset.comparable(cand[i], cand[k]) && !poset.comparable(cand[j], cand[k])) {
          return std::array<NodeId, 3>{cand[i], cand[j], cand[k]};
        }
      }
    }
  }
  return std::nullopt;
}

// rep[v] = smallest u with <u> = <v>, from mutual arcs of the graph.
std::vector<Index> class_representatives(const ReducedPowerGraph& graph) {
  const Index n = graph.group().order();
  std::vector<Index> rep(n);
  for (Index v = 0; v < n; ++v) {
    rep[v] = v;
    for (Index u : graph.arcs(v)) {
      if (u >= rep[v]) break;
      if (graph.has_arc(u, v)) {
        rep[v] = u;
        break;
      }
    }
  }
  return rep;
}

std::optional<std::array<Index, 3>> independent_triple(const ReducedPowerGraph& graph, std::span<const Index> cand) {
  const std::size_t n = cand.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (graph.adjacent(cand[i], cand[j])) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!graph.adjacent(cand[i], cand[k]) && !graph.adjacent(cand[j], cand[k])) {
          return std::array<Index, 3>{cand[i], cand[j], cand[k]};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Index> neighbor_reps(const ReducedPowerGraph& graph, const std::vector<Index>& rep, Index c) {
  std::vector<Index> out;
  for (Index u : graph.neighbors(c)) {
    if (rep[u] != c) out.push_back(rep[u]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

void set_jobs(int jobs) { g_jobs = std::max(jobs, 0); }

int jobs() { return g_jobs > 0 ? g_jobs : omp_get_max_threads(); }

namespace serial {

std::vector<std::uint32_t> element_orders(const Group& g) {
  std::vector<std::uint32_t> out(g.order(), 1);
  for (Index i = 1; i < g.order(); ++i) {
    std::uint32_t k = 1;
    for (Index y = i; y != Group::identity(); y = g.mul(y, i)) ++k;
    out[i] = k;
  }
  return out;
}

std::vector<Index> centralizer(const Group& g, Index i) {
  std::vector<Index> out;
  for (Index c = 0; c < g.order(); ++c) {
    if (g.mul(c, i) == g.mul(i, c)) out.push_back(c);
  }
  return out;
}

std::vector<CyclicSubgroupRecord> cyclic_subgroups(const Group& g) {
  std::vector<CyclicSubgroupRecord> out;
  std::vector<bool> assigned(g.order(), false);
  for (Index i = 0; i < g.order(); ++i) {
    if (assigned[i]) continue;
    CyclicSubgroupRecord rec{i, powers_of(g, i)};
    const std::uint64_t n = rec.order();
    for (std::uint64_t k = 0; k < n; ++k) {
      if (std::gcd(k, n) == 1) assigned[rec.powers[k]] = true;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<std::vector<Index>> power_arcs(const Group& g) {
  std::vector<std::vector<Index>> out(g.order());
  for (Index u = 1; u < g.order(); ++u) {
    auto p = powers_of(g, u);
    std::vector<Index> row(p.begin() + 2, p.end());
    std::sort(row.begin(), row.end());
    out[u] = std::move(row);
  }
  return out;
}

std::optional<AntichainHit> second_type_search(const CyclicPoset& poset) {
  for (NodeId d = 1; d < poset.size(); ++d) {
    if (auto t = smallest_antichain(poset, poset.above(d))) return AntichainHit{d, *t};
  }
  return std::nullopt;
}

std::optional<ClawHit> brute_claw_search(const ReducedPowerGraph& graph) {
  const auto rep = class_representatives(graph);
  for (Index c = 1; c < graph.group().order(); ++c) {
    if (rep[c] != c) continue;
    const auto cand = neighbor_reps(graph, rep, c);
    if (auto t = independent_triple(graph, cand)) return ClawHit{c, *t};
  }
  return std::nullopt;
}

std::vector<std::uint32_t> square_root_counts(const Group& g, std::uint64_t m) {
  std::vector<std::uint32_t> hist(g.order(), 0);
  for (Index x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == m) ++hist[g.mul(x, x)];
  }
  return hist;
}

}  // namespace serial

namespace parallel {

std::vector<std::uint32_t> element_orders(const Group& g) {
  const std::int64_t n = g.order();
  std::vector<std::uint32_t> out(n);
#pragma omp parallel for schedule(static) num_threads(jobs())
  for (std::int64_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(g.element_order(static_cast<Index>(i)));
  return out;
}

std::vector<Index> centralizer(const Group& g, Index i) {
  const std::int64_t n = g.order();
  std::vector<char> keep(n);
#pragma omp parallel for schedule(static) num_threads(jobs())
  for (std::int64_t c = 0; c < n; ++c) {
    const auto ci = static_cast<Index>(c);
    keep[c] = g.mul(ci, i) == g.mul(i, ci);
  }
  std::vector<Index> out;
  for (std::int64_t c = 0; c < n; ++c) {
    if (keep[c]) out.push_back(static_cast<Index>(c));
  }
  return out;
}

std::vector<CyclicSubgroupRecord> cyclic_subgroups(const Group& g) {
  // Any thread may discover a subgroup; the record is always stored at its
  // smallest generator so the result does not depend on scheduling.
  const std::int64_t n = g.order();
  std::unique_ptr<std::atomic<bool>[]> claimed(new std::atomic<bool>[n]);
  std::unique_ptr<std::atomic<bool>[]> owner(new std::atomic<bool>[n]);
  for (std::int64_t i = 0; i < n; ++i) {
    claimed[i].store(false, std::memory_order_relaxed);
    owner[i].store(false, std::memory_order_relaxed);
  }
  std::vector<std::vector<Index>> slot(n);

#pragma omp parallel for schedule(dynamic, 64) num_threads(jobs())
  for (std::int64_t i = 0; i < n; ++i) {
    if (claimed[i].load(std::memory_order_relaxed)) continue;
    const auto p = powers_of(g, static_cast<Index>(i));
    const std::uint64_t ord = p.size();
    std::uint64_t best_k = 1 % ord;
    for (std::uint64_t k = 1; k < ord; ++k) {
      if (std::gcd(k, ord) == 1 && p[k] < p[best_k]) best_k = k;
    }
    const Index m = p[best_k];
    if (owner[m].exchange(true)) continue;
    std::vector<Index> rebased(ord);
    for (std::uint64_t k = 0; k < ord; ++k) rebased[k] = p[(k * best_k) % ord];
    for (std::uint64_t k = 0; k < ord; ++k) {
      if (std::gcd(k, ord) == 1) claimed[rebased[k]].store(true, std::memory_order_relaxed);
    }
    slot[m] = std::move(rebased);
  }

  std::vector<CyclicSubgroupRecord> out;
  for (std::int64_t i = 0; i < n; ++i) {
    if (!slot[i].empty()) out.push_back({static_cast<Index>(i), std::move(slot[i])});
  }
  return out;
}

std::vector<std::vector<Index>> power_arcs(const Group& g) {
  const std::int64_t n = g.order();
  std::vector<std::vector<Index>> out(n);
#pragma omp parallel for schedule(dynamic, 64) num_threads(jobs())
  for (std::int64_t u = 1; u < n; ++u) {
    auto p = powers_of(g, static_cast<Index>(u));
    std::vector<Index> row(p.begin() + 2, p.end());
    std::sort(row.begin(), row.end());
    out[u] = std::move(row);
  }
  return out;
}

std::optional<AntichainHit> second_type_search(const CyclicPoset& poset) {
  const std::int64_t n = poset.size();
  std::atomic<std::int64_t> best{n};
  std::vector<std::optional<std::array<NodeId, 3>>> hits(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs())
  for (std::int64_t d = 1; d < n; ++d) {
    if (d > best.load(std::memory_order_relaxed)) continue;
    hits[d] = smallest_antichain(poset, poset.above(static_cast<NodeId>(d)));
    if (hits[d]) {
      std::int64_t cur = best.load();
      while (d < cur && !best.compare_exchange_weak(cur, d)) {
      }
    }
  }
  const std::int64_t d = best.load();
  if (d == n) return std::nullopt;
  return AntichainHit{static_cast<NodeId>(d), *hits[d]};
}

std::optional<ClawHit> brute_claw_search(const ReducedPowerGraph& graph) {
  const std::int64_t n = graph.group().order();
  std::vector<Index> rep(n);
#pragma omp parallel for schedule(dynamic, 256) num_threads(jobs())
  for (std::int64_t v = 0; v < n; ++v) {
    Index r = static_cast<Index>(v);
    for (Index u : graph.arcs(static_cast<Index>(v))) {
      if (u >= r) break;
      if (graph.has_arc(u, static_cast<Index>(v))) {
        r = u;
        break;
      }
    }
    rep[v] = r;
  }

  std::atomic<std::int64_t> best{n};
  std::vector<std::optional<std::array<Index, 3>>> hits(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs())
  for (std::int64_t c = 1; c < n; ++c) {
    if (rep[c] != c || c > best.load(std::memory_order_relaxed)) continue;
    const auto cand = neighbor_reps(graph, rep, static_cast<Index>(c));
    hits[c] = independent_triple(graph, cand);
    if (hits[c]) {
      std::int64_t cur = best.load();
      while (c < cur && !best.compare_exchange_weak(cur, c)) {
      }
    }
  }
  const std::int64_t c = best.load();
  if (c == n) return std::nullopt;
  return ClawHit{static_cast<Index>(c), *hits[c]};
}

std::vector<std::uint32_t> square_root_counts(const Group& g, std::uint64_t m) {
  const std::int64_t n = g.order();
  constexpr Index kSkip = std::numeric_limits<Index>::max();
  std::vector<Index> square(n);
#pragma omp parallel for schedule(static) num_threads(jobs())
  for (std::int64_t x = 0; x < n; ++x) {
    const auto xi = static_cast<Index>(x);
    square[x] = g.element_order(xi) == m ? g.mul(xi, xi) : kSkip;
  }
  std::vector<std::uint32_t> hist(n, 0);
  for (Index s : square) {
    if (s != kSkip) ++hist[s];
  }
  return hist;
}

}  // namespace parallel

}  // namespace powerclaw::kernels
