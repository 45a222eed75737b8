#include "powerclaw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>

#include "powerclaw/claw.hpp"
#include "powerclaw/families.hpp"
#include "powerclaw/group_spec.hpp"
#include "powerclaw/numtheory.hpp"
#include "powerclaw/structure.hpp"

namespace powerclaw {

using json = nlohmann::ordered_json;

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {"V1", "V2",  "V3",  "V4",  "V5",  "V6",  "V7",  "V8",
                                               "V9", "V10", "V11", "V12", "V13", "V14", "V15"};
  return ids;
}

namespace {

struct Entry {
  std::string spec;
  GroupSpec parsed;
  std::unique_ptr<Group> group;
  std::unique_ptr<CyclicPoset> poset;
  std::string error;
  std::optional<ClawWitness> fast;
  bool has_brute = false;
  std::optional<ClawWitness> brute;

  std::optional<bool> nilpotent, solvable, abelian, cyclic, eppo;
  std::optional<std::uint64_t> exponent, center_order;

  bool ok() const { return group != nullptr; }
  bool claw_free() const { return !fast; }
  std::uint64_t order() const { return group->order(); }
  std::size_t pi() const { return distinct_prime_count(group->order()); }
};

CheckReport make_report(const std::string& id, const std::string& subject) {
  CheckReport r;
  r.check_id = id;
  r.subject = subject;
  return r;
}

json witness_or_null(const Group& g, const std::optional<ClawWitness>& w) {
  return w ? witness_json(g, *w) : json(nullptr);
}

json primes_json(std::uint64_t n) {
  json out = json::array();
  for (const auto& f : factorize(n).factors) out.push_back(f.prime);
  return out;
}

// Bookkeeping shared by the catalog sweeps: counts the groups in the
// domain and keeps the first counterexample.
class Sweep {
 public:
  explicit Sweep(CheckReport& report) : report_(report) {}

  void count() { ++groups_; }
  void fail(const std::string& why, json payload) {
    if (!report_.pass) return;
    report_.pass = false;
    report_.summary = why;
    report_.evidence["counterexample"] = std::move(payload);
  }
  void finish(const std::string& domain) {
    report_.evidence["groups"] = groups_;
    if (report_.pass) report_.summary = "no counterexample found over " + std::to_string(groups_) + " " + domain;
  }

 private:
  CheckReport& report_;
  std::size_t groups_ = 0;
};

// Pairwise incomparable triple of strict overgroups above some non-trivial
// node, decided with member-list inclusion only.
bool has_overgroup_antichain_by_members(const CyclicPoset& poset) {
  auto subset = [&](NodeId a, NodeId b) {
    const auto& ma = poset.node(a).members;
    const auto& mb = poset.node(b).members;
    return std::includes(mb.begin(), mb.end(), ma.begin(), ma.end());
  };
  for (NodeId d = 1; d < poset.size(); ++d) {
    std::vector<NodeId> up;
    for (NodeId b = 1; b < poset.size(); ++b) {
      if (b != d && poset.node(b).order > poset.node(d).order && subset(d, b)) up.push_back(b);
    }
    for (std::size_t i = 0; i < up.size(); ++i) {
      for (std::size_t j = i + 1; j < up.size(); ++j) {
        if (subset(up[i], up[j]) || subset(up[j], up[i])) continue;
        for (std::size_t k = j + 1; k < up.size(); ++k) {
          const bool free_ik = !subset(up[i], up[k]) && !subset(up[k], up[i]);
          const bool free_jk = !subset(up[j], up[k]) && !subset(up[k], up[j]);
          if (free_ik && free_jk) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

struct Verifier::State {
  VerifyOptions options;
  std::vector<Entry> entries;
  bool analysed = false;

  ClawOptions claw_options(std::size_t max_vertices) const {
    ClawOptions o;
    o.validation_max_vertices = max_vertices;
    o.graph_limits = options.graph_limits;
    return o;
  }

  std::vector<Entry>& catalog() {
    if (analysed) return entries;
    analysed = true;
    entries.reserve(options.catalog.size());
    for (const auto& spec : options.catalog) {
      Entry e;
      e.spec = spec;
      try {
        e.parsed = parse_group_spec(spec);
        e.spec = e.parsed.text();
        e.group = std::make_unique<Group>(build(e.parsed, options.limits));
        e.poset = std::make_unique<CyclicPoset>(*e.group);
        e.fast = find_claw_fast(*e.poset);
        if (e.group->order() <= options.oracle_max_order) {
          e.brute = find_claw_brute(power_graph_by_powers(*e.group, options.graph_limits));
          e.has_brute = true;
        }
      } catch (const std::exception& ex) {
        e.group.reset();
        e.poset.reset();
        e.error = ex.what();
      }
      entries.push_back(std::move(e));
    }
    return entries;
  }

  bool nilpotent(Entry& e) {
    if (!e.nilpotent) e.nilpotent = is_nilpotent(*e.group);
    return *e.nilpotent;
  }
  bool solvable(Entry& e) {
    if (!e.solvable) e.solvable = nilpotent(e) || is_solvable(*e.group);
    return *e.solvable;
  }
  bool cyclic(Entry& e) {
    if (!e.cyclic) e.cyclic = is_cyclic(*e.group);
    return *e.cyclic;
  }
  bool eppo(Entry& e) {
    if (!e.eppo) e.eppo = is_eppo(*e.group);
    return *e.eppo;
  }
  std::uint64_t exp(Entry& e) {
    if (!e.exponent) e.exponent = exponent(*e.group);
    return *e.exponent;
  }
  std::uint64_t center_size(Entry& e) {
    if (!e.center_order) e.center_order = center(*e.group).order();
    return *e.center_order;
  }

  // Visits every catalog member; construction failures fail the sweep.
  void each(Sweep& sweep, const std::function<void(Entry&)>& fn) {
    for (auto& e : catalog()) {
      if (!e.ok()) {
        sweep.fail(e.spec + ": construction failed: " + e.error, {{"group", e.spec}, {"error", e.error}});
        continue;
      }
      fn(e);
    }
  }

  CheckReport v1();
  CheckReport v2();
  CheckReport v3();
  CheckReport v4();
  CheckReport v5();
  CheckReport v6();
  CheckReport v7();
  CheckReport v8();
  CheckReport v9();
  CheckReport v10();
  CheckReport v11();
  CheckReport v12();
  CheckReport v13();
  CheckReport v14();
  CheckReport v15();
};

CheckReport Verifier::State::v1() {
  CheckReport r = make_report("V1", "catalog groups of order <= " + std::to_string(options.oracle_max_order));
  Sweep sweep(r);
  std::size_t claws = 0, first = 0, second = 0;
  each(sweep, [&](Entry& e) {
    if (!e.has_brute) return;
    sweep.count();
    const Group& g = *e.group;
    if (e.brute.has_value() != e.fast.has_value()) {
      sweep.fail(e.spec + ": brute force and poset route disagree",
                 {{"group", e.spec}, {"brute", witness_or_null(g, e.brute)}, {"fast", witness_or_null(g, e.fast)}});
      return;
    }
    if (!e.brute) return;
    ++claws;
    for (const auto* w : {&*e.brute, &*e.fast}) {
      if (w->kind == ClawKind::Mixed || !validate_witness(g, *w)) {
        sweep.fail(e.spec + ": claw that is neither purely first nor purely second type",
                   {{"group", e.spec}, {"witness", witness_json(g, *w)}});
        return;
      }
    }
    (e.brute->kind == ClawKind::First ? first : second)++;
  });
  r.evidence["claws"] = claws;
  r.evidence["first_type"] = first;
  r.evidence["second_type"] = second;
  sweep.finish("groups");
  return r;
}

CheckReport Verifier::State::v2() {
  CheckReport r = make_report("V2", "C(n), 2 <= n <= 1000");
  Sweep sweep(r);
  std::size_t in_count = 0;
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    sweep.count();
    const Group g = powerclaw::cyclic(n, options.limits);
    const CyclicPoset poset(g);
    const bool fast_free = !find_claw_fast(poset);
    const bool brute_free = !find_claw_brute(power_graph_by_powers(g, options.graph_limits));
    const bool predicted = in_omega(n);
    in_count += predicted;
    if (fast_free != predicted || brute_free != predicted) {
      sweep.fail("C(" + std::to_string(n) + "): claw-freeness does not match membership in Omega",
                 {{"n", n}, {"omega_class", std::string(to_string(omega_class(n)))}, {"fast_claw_free", fast_free},
                  {"brute_claw_free", brute_free}});
    }
  }
  r.evidence["in_omega"] = in_count;
  sweep.finish("cyclic groups");
  return r;
}

namespace {

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

CheckReport Verifier::State::v3() {
  CheckReport r = make_report("V3", "abelian p-groups of order <= 256");
  Sweep sweep(r);
  std::size_t free_count = 0;
  for (std::uint64_t p = 2; p <= 256; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t pk = p;
    for (unsigned k = 1; pk <= 256; ++k, pk *= p) {
      std::vector<std::vector<unsigned>> parts;
      std::vector<unsigned> cur;
      partitions(k, k, cur, parts);
      for (const auto& lambda : parts) {
        sweep.count();
        std::string spec;
        for (unsigned e : lambda) spec += (spec.empty() ? "" : "x") + ("C(" + std::to_string(*checked_pow(p, e)) + ")");
        const Group g = build_group(spec, options.limits);
        const auto decision = is_claw_free(g, claw_options(options.oracle_max_order));
        const bool is_cyc = lambda.size() == 1;
        const bool exp_p = lambda.front() == 1;
        const bool special = p == 2 && lambda.size() == 2 && lambda[0] == 2;
        const bool predicted = is_cyc || exp_p || special;
        free_count += decision.claw_free;
        if (decision.claw_free != predicted || !decision.validated) {
          sweep.fail(spec + ": claw-freeness does not match the abelian p-group classification",
                     {{"group", spec}, {"claw_free", decision.claw_free}, {"predicted", predicted},
                      {"validated", decision.validated}});
        }
      }
    }
  }
  r.evidence["claw_free"] = free_count;
  sweep.finish("groups");
  return r;
}

CheckReport Verifier::State::v4() {
  CheckReport r = make_report("V4", "catalog p-groups, p odd");
  Sweep sweep(r);
  each(sweep, [&](Entry& e) {
    const auto pp = is_prime_power(e.order());
    if (!pp || pp->prime == 2) return;
    sweep.count();
    const bool predicted = cyclic(e) || exp(e) == pp->prime;
    if (e.claw_free() != predicted) {
      sweep.fail(e.spec + ": claw-free iff cyclic or of exponent p fails",
                 {{"group", e.spec}, {"claw_free", e.claw_free()}, {"cyclic", cyclic(e)}, {"exponent", exp(e)}});
    }
  });
  sweep.finish("groups");
  return r;
}

CheckReport Verifier::State::v5() {
  CheckReport r = make_report("V5", "non-cyclic catalog 2-groups, dihedral and non-claw-free families");
  Sweep sweep(r);
  each(sweep, [&](Entry& e) {
    const auto pp = is_prime_power(e.order());
    if (!pp || pp->prime != 2 || cyclic(e)) return;
    sweep.count();
    if (!e.claw_free()) return;
    const bool ok = exp(e) <= 4 || is_dihedral(*e.group);
    if (!ok) {
      sweep.fail(e.spec + ": claw-free 2-group of exponent > 4 that is not dihedral",
                 {{"group", e.spec}, {"exponent", exp(e)}});
    }
  });

  json families = json::array();
  auto expect = [&](const std::string& spec, bool want_free) {
    const Group g = build_group(spec, options.limits);
    const auto d = is_claw_free(g, claw_options(options.oracle_max_order));
    families.push_back({{"group", spec}, {"claw_free", d.claw_free}});
    if (d.claw_free != want_free) {
      sweep.fail(spec + (want_free ? ": expected claw-free" : ": expected a claw"),
                 {{"group", spec}, {"claw_free", d.claw_free}, {"witness", witness_or_null(g, d.witness)}});
    }
  };
  for (std::uint64_t n = 4; n <= 256; n *= 2) expect("D(" + std::to_string(n) + ")", true);
  for (std::uint64_t n = 8; n <= 64; n *= 2) expect("Q(" + std::to_string(n) + ")", false);
  for (std::uint64_t n = 16; n <= 64; n *= 2) expect("SD(" + std::to_string(n) + ")", false);
  expect("Mod16", false);
  expect("C(2)xC(8)", false);
  r.evidence["families"] = std::move(families);
  sweep.finish("non-cyclic catalog 2-groups");
  return r;
}

CheckReport Verifier::State::v6() {
  CheckReport r = make_report("V6", "nilpotent catalog groups");
  Sweep sweep(r);
  each(sweep, [&](Entry& e) {
    if (!nilpotent(e)) return;
    sweep.count();
    if (!e.claw_free()) return;
    const bool p_group = is_p_group(e.order());
    const bool cyclic_pq = cyclic(e) && omega_class(e.order()) == OmegaClass::PrimeTimesPrimePower;
    if (!p_group && !cyclic_pq) {
      sweep.fail(e.spec + ": claw-free nilpotent group that is neither a p-group nor cyclic of order p^n q",
                 {{"group", e.spec}, {"order", e.order()}, {"cyclic", cyclic(e)}});
    }
  });
  sweep.finish("groups");
  return r;
}

CheckReport Verifier::State::v7() {
  CheckReport r = make_report("V7", "claw-free catalog groups, centralizers of prime-order elements");
  Sweep sweep(r);
  std::size_t centralizers = 0;
  each(sweep, [&](Entry& e) {
    if (!e.claw_free()) return;
    sweep.count();
    const Group& g = *e.group;
    for (Index x : prime_order_class_representatives(g)) {
      ++centralizers;
      const Subgroup c = centralizer(g, x);
      const auto primes = factorize(c.order()).primes();
      json payload = {{"group", e.spec}, {"element", x}, {"element_order", g.element_order(x)},
                      {"centralizer_order", c.order()}};
      if (primes.size() > 2) {
        sweep.fail(e.spec + ": centralizer with more than two prime divisors", payload);
        return;
      }
      if (primes.size() == 2) {
        bool found = false;
        for (std::uint64_t p : primes) {
          const Subgroup s = sylow_subgroup(c, p);
          if (is_cyclic(s) && is_normal_in(s, c)) found = true;
        }
        if (!found) {
          sweep.fail(e.spec + ": no Sylow subgroup of the centralizer is cyclic and normal", payload);
          return;
        }
      }
    }
  });
  r.evidence["centralizers"] = centralizers;
  sweep.finish("groups");
  return r;
}

namespace {

// G = <h> x (Q x| <y>) with h central of order p, Q a cyclic normal Sylow
// q-subgroup, <y> a cyclic p-group acting faithfully on Q, and |y| = p or
// p = 2 and |y| = 4. Returns the witnesses when found.
std::optional<json> decomposition_shape(const Group& g) {
  const auto primes = factorize(g.order()).primes();
  if (primes.size() != 2) return std::nullopt;
  const Subgroup z = center(g);
  for (int swap = 0; swap < 2; ++swap) {
    const std::uint64_t p = primes[swap];
    const std::uint64_t q = primes[1 - swap];
    const Subgroup sq = sylow_subgroup(g, q);
    if (!is_cyclic(sq) || !is_normal(sq)) continue;
    const Subgroup sp = sylow_subgroup(g, p);
    const std::uint64_t want = sp.order() / p;
    if (want != p && !(p == 2 && want == 4)) continue;
    Index q_gen = 0;
    for (Index x : sq.members()) {
      if (g.element_order(x) == sq.order()) q_gen = x;
    }
    for (Index h : z.sorted_members()) {
      if (g.element_order(h) != p) continue;
      for (Index y : sp.sorted_members()) {
        if (g.element_order(y) != want) continue;
        const Index y_min = g.pow(y, want / p);
        if (g.mul(y_min, q_gen) == g.mul(q_gen, y_min)) continue;
        std::vector<Index> gens{q_gen, y};
        const Subgroup k = Subgroup::generated_by(g, gens);
        if (k.contains(h) || k.order() * p != g.order()) continue;
        return json{{"p", p}, {"q", q}, {"H", h}, {"P_order", want}, {"Q_order", sq.order()}};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CheckReport Verifier::State::v8() {
  CheckReport r = make_report("V8", "decomposable non-nilpotent catalog groups");
  Sweep sweep(r);
  json shapes = json::array();
  each(sweep, [&](Entry& e) {
    if (!e.parsed.decomposable() || nilpotent(e)) return;
    sweep.count();
    if (!e.claw_free()) return;
    const auto shape = decomposition_shape(*e.group);
    if (!shape) {
      sweep.fail(e.spec + ": claw-free but not of the form C_p x (Q x| P)", {{"group", e.spec}});
      return;
    }
    json row = {{"group", e.spec}};
    row.update(*shape);
    shapes.push_back(std::move(row));
  });
  r.evidence["claw_free_shapes"] = std::move(shapes);
  sweep.finish("groups");
  return r;
}

CheckReport Verifier::State::v9() {
  CheckReport r = make_report("V9", "solvable catalog groups");
  Sweep sweep(r);
  std::size_t free_count = 0;
  each(sweep, [&](Entry& e) {
    if (!solvable(e)) return;
    sweep.count();
    if (!e.claw_free()) return;
    ++free_count;
    if (e.pi() > 4) {
      sweep.fail(e.spec + ": solvable claw-free group with more than four prime divisors",
                 {{"group", e.spec}, {"primes", primes_json(e.order())}});
    }
  });
  r.evidence["claw_free"] = free_count;

  const std::string spec = "Semi(1891,15,auto)";
  const Group g = build_group(spec, options.limits);
  const auto d = is_claw_free(g, claw_options(options.oracle_max_order));
  const std::size_t pi = distinct_prime_count(g.order());
  r.evidence["example"] = {{"group", spec},       {"order", g.order()},
                           {"primes", primes_json(g.order())}, {"claw_free", d.claw_free},
                           {"solvable", is_solvable(g)}};
  if (!d.claw_free || pi != 4) sweep.fail(spec + ": expected a claw-free group with four prime divisors", r.evidence["example"]);
  sweep.finish("groups");
  return r;
}

CheckReport Verifier::State::v10() {
  CheckReport r = make_report("V10", "semidirect products C_{p1 p2} x| C_{p3 p4}");
  Sweep sweep(r);
  json rows = json::array();
  for (const std::string spec :
       {"Semi(91,6,auto)", "Semi(91,6,43)", "Semi(91,6,3)", "Semi(341,10,auto)", "Semi(1891,15,auto)"}) {
    sweep.count();
    const GroupSpec parsed = parse_group_spec(spec);
    const std::uint64_t n = parsed.factors[0].params[0];
    const std::uint64_t m = parsed.factors[0].params[1];
    const std::uint64_t k =
        parsed.factors[0].auto_action ? *auto_action_exponent(n, m) : parsed.factors[0].params[2];
    const Group g = build(parsed, options.limits);
    const auto d = is_claw_free(g, claw_options(options.oracle_max_order));

    // Elements of prime order dividing n all lie in the kernel C_n.
    const auto kernel_primes = factorize(n).primes();
    json cents = json::array();
    bool condition = true;
    for (std::uint64_t p : kernel_primes) {
      Index x = 0;
      for (Index i = 1; i < g.order(); ++i) {
        if (g.element_order(i) == p && n % g.element_order(i) == 0) {
          x = i;
          break;
        }
      }
      const std::uint64_t c = centralizer(g, x).order();
      cents.push_back({{"prime", p}, {"centralizer_order", c}});
      condition = condition && c == n;
    }
    const auto fg = factorize(g.order()).factors;
    const bool four_primes =
        fg.size() == 4 && std::all_of(fg.begin(), fg.end(), [](const PrimePower& f) { return f.exponent == 1; });
    json row = {{"group", spec}, {"action_exponent", k}, {"order", g.order()}, {"kernel_centralizers", cents},
                {"centralizer_condition", condition}, {"claw_free", d.claw_free}};
    if (!four_primes || condition != d.claw_free) {
      sweep.fail(spec + ": claw-freeness does not match the centralizer condition", row);
    }
    rows.push_back(std::move(row));
  }
  r.evidence["cases"] = std::move(rows);
  sweep.finish("groups");
  return r;
}

namespace {

CheckReport sub(const std::string& subject) { return make_report("V11", subject); }

std::vector<Index> involutions(const Group& g) {
  std::vector<Index> out;
  for (Index i = 1; i < g.order(); ++i) {
    if (g.element_order(i) == 2) out.push_back(i);
  }
  return out;
}

// Checks that every involution has `want` cyclic overgroups of order 4.
CheckReport overgroup_report(const std::string& spec, const GroupLimits& limits, std::size_t want, bool every) {
  CheckReport r = sub(spec);
  const Group g = build_group(spec, limits);
  const CyclicPoset poset(g);
  const auto inv = involutions(g);
  std::map<std::size_t, std::size_t> histogram;
  for (Index x : inv) ++histogram[count_cyclic_overgroups(poset, x, 4)];
  r.evidence["involutions"] = inv.size();
  json hist = json::object();
  for (const auto& [count, n] : histogram) hist[std::to_string(count)] = n;
  r.evidence["overgroup_histogram"] = hist;
  if (every) {
    r.pass = histogram.size() == 1 && histogram.begin()->first == want;
    r.evidence["overgroup_count"] = want;
  } else {
    r.pass = !histogram.empty() && histogram.rbegin()->first >= want;
    r.evidence["max_overgroup_count"] = histogram.empty() ? 0 : histogram.rbegin()->first;
  }
  r.summary = r.pass ? "no counterexample found over " + std::to_string(inv.size()) + " involutions"
                     : "overgroup counts differ from " + std::to_string(want);
  return r;
}

}  // namespace

CheckReport Verifier::State::v11() {
  CheckReport r = make_report("V11", "M11, PSL(3,4), PSL(3,3), PSU(3,3), Sz2(q), PSL(2,q)");
  r.subreports.push_back(overgroup_report("M11", options.limits, 3, true));

  {
    CheckReport s = sub("PSL(3,4)");
    const Group g = build_group("PSL(3,4)", options.limits);
    const auto roots = kernels::parallel::square_root_counts(g, 4);
    std::map<std::uint32_t, std::size_t> histogram;
    for (Index x : involutions(g)) ++histogram[roots[x]];
    json hist = json::object();
    for (const auto& [count, n] : histogram) hist[std::to_string(count)] = n;
    s.evidence["involutions"] = involutions(g).size();
    s.evidence["square_root_histogram"] = hist;
    s.pass = histogram.size() == 1 && histogram.begin()->first == 12;
    s.summary = s.pass ? "no counterexample found: every involution is the square of 12 elements of order 4"
                       : "square-root counts differ from 12";
    r.subreports.push_back(std::move(s));
  }

  r.subreports.push_back(overgroup_report("PSL(3,3)", options.limits, 3, false));
  r.subreports.push_back(overgroup_report("PSU(3,3)", options.limits, 4, true));

  {
    CheckReport s = sub("Sz2(8), Sz2(32)");
    for (std::uint64_t q : {8u, 32u}) {
      const Group g = suzuki_2group(q, options.limits);
      const auto spec = order_spectrum(g);
      json js = json::object();
      for (const auto& [o, n] : spec) js[std::to_string(o)] = n;
      s.evidence["Sz2(" + std::to_string(q) + ")"] = js;
      const OrderSpectrum want{{1, 1}, {2, q - 1}, {4, q * q - q}};
      if (spec != want) s.pass = false;
    }
    s.summary = s.pass ? "no counterexample found: q-1 involutions and q^2-q elements of order 4"
                       : "spectrum differs from {2: q-1, 4: q^2-q}";
    r.subreports.push_back(std::move(s));
  }

  {
    CheckReport s = sub("PSL(2,q), graph decision vs arithmetic predicate");
    json rows = json::array();
    for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13, 16, 19, 23, 25, 27, 29, 31, 32, 37, 59}) {
      const Group g = psl2(q, options.limits);
      const CyclicPoset poset(g);
      const bool brute_free = !find_claw_brute(power_graph_by_powers(g, options.graph_limits));
      const bool fast_free = !find_claw_fast(poset);
      const bool predicate = psl2_clawfree_predicate(q);
      rows.push_back({{"q", q}, {"order", g.order()}, {"graph_claw_free", brute_free}, {"fast_claw_free", fast_free},
                      {"predicate", predicate}});
      if (brute_free != predicate || fast_free != predicate) s.pass = false;
    }
    s.evidence["rows"] = std::move(rows);
    s.summary = s.pass ? "no counterexample found over 17 values of q" : "graph decision differs from the predicate";
    r.subreports.push_back(std::move(s));
  }

  for (const auto& s : r.subreports) r.pass = r.pass && s.pass;
  std::size_t passed = 0;
  for (const auto& s : r.subreports) passed += s.pass;
  r.summary = std::to_string(passed) + " of " + std::to_string(r.subreports.size()) + " sub-checks pass";
  if (r.pass) r.summary = "no counterexample found in " + std::to_string(r.subreports.size()) + " sub-checks";
  return r;
}

CheckReport Verifier::State::v12() {
  CheckReport r = make_report("V12", "entire catalog, PSL(2,64)");
  Sweep sweep(r);
  std::size_t free_count = 0;
  each(sweep, [&](Entry& e) {
    sweep.count();
    if (!e.claw_free()) return;
    ++free_count;
    if (e.pi() > 5) {
      sweep.fail(e.spec + ": claw-free group with more than five prime divisors",
                 {{"group", e.spec}, {"primes", primes_json(e.order())}});
    }
  });
  r.evidence["claw_free"] = free_count;

  const Group g = psl2(64, options.limits);
  const auto d = is_claw_free(g, claw_options(options.graph_limits.max_vertices));
  r.evidence["PSL(2,64)"] = {{"order", g.order()},
                             {"primes", primes_json(g.order())},
                             {"claw_free", d.claw_free},
                             {"validated", d.validated},
                             {"fast_path_only", d.fast_path_only}};
  if (!d.claw_free || distinct_prime_count(g.order()) != 5 || g.order() != 262080) {
    sweep.fail("PSL(2,64): expected a claw-free group of order 262080 with five prime divisors",
               r.evidence["PSL(2,64)"]);
  }
  sweep.finish("groups");
  return r;
}

CheckReport Verifier::State::v13() {
  CheckReport r = make_report("V13", "EPPO catalog groups");
  Sweep sweep(r);
  each(sweep, [&](Entry& e) {
    if (!eppo(e)) return;
    sweep.count();
    const Group& g = *e.group;
    for (const auto* w : {&e.fast, &e.brute}) {
      if (*w && (*w)->kind == ClawKind::First) {
        sweep.fail(e.spec + ": EPPO group with a first-type claw", {{"group", e.spec}, {"witness", witness_json(g, **w)}});
        return;
      }
    }
    const bool antichain = has_overgroup_antichain_by_members(*e.poset);
    if (e.claw_free() == antichain) {
      sweep.fail(e.spec + ": claw-freeness does not match the absence of three incomparable cyclic overgroups",
                 {{"group", e.spec}, {"claw_free", e.claw_free()}, {"overgroup_antichain", antichain}});
    }
  });
  sweep.finish("groups");
  return r;
}

CheckReport Verifier::State::v14() {
  CheckReport r = make_report("V14", "claw-free catalog groups with at least three prime divisors");
  Sweep sweep(r);
  each(sweep, [&](Entry& e) {
    if (!e.claw_free() || e.pi() < 3) return;
    sweep.count();
    if (center_size(e) != 1) {
      sweep.fail(e.spec + ": non-trivial center", {{"group", e.spec}, {"center_order", center_size(e)}});
    }
  });
  sweep.finish("groups");
  return r;
}

CheckReport Verifier::State::v15() {
  CheckReport r = make_report("V15", "AGL(3,2)");
  const Group g = agl3_2(options.limits);
  const CyclicPoset poset(g);
  const auto inv = involutions(g);
  std::map<std::size_t, std::size_t> histogram;
  std::optional<Index> first16;
  for (Index x : inv) {
    const std::size_t c = count_cyclic_overgroups(poset, x, 6);
    ++histogram[c];
    if (c == 16 && !first16) first16 = x;
  }
  json hist = json::object();
  for (const auto& [count, n] : histogram) hist[std::to_string(count)] = n;
  r.evidence["order"] = g.order();
  r.evidence["involutions"] = inv.size();
  r.evidence["order6_overgroup_histogram"] = hist;
  r.pass = first16.has_value();
  if (first16) r.evidence["involution"] = *first16;
  r.summary = r.pass ? "no counterexample found: an involution lies in exactly 16 cyclic subgroups of order 6"
                     : "no involution lies in exactly 16 cyclic subgroups of order 6";
  return r;
}

Verifier::Verifier(VerifyOptions options) : state_(std::make_unique<State>()) {
  state_->options = std::move(options);
}

Verifier::~Verifier() = default;

CheckReport Verifier::run(const std::string& id) {
  using Fn = CheckReport (State::*)();
  static const std::map<std::string, Fn> table = {
      {"V1", &State::v1},   {"V2", &State::v2},   {"V3", &State::v3},   {"V4", &State::v4},   {"V5", &State::v5},
      {"V6", &State::v6},   {"V7", &State::v7},   {"V8", &State::v8},   {"V9", &State::v9},   {"V10", &State::v10},
      {"V11", &State::v11}, {"V12", &State::v12}, {"V13", &State::v13}, {"V14", &State::v14}, {"V15", &State::v15},
  };
  const auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("unknown check id: " + id);
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = (state_.get()->*(it->second))();
  } catch (const std::exception& e) {
    r = make_report(id, "error");
    r.pass = false;
    r.summary = std::string("check aborted: ") + e.what();
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CheckReport> Verifier::run_all() {
  std::vector<CheckReport> out;
  for (const auto& id : check_ids()) out.push_back(run(id));
  return out;
}

CheckReport run_check(const std::string& check_id, const VerifyOptions& options) {
  Verifier v(options);
  return v.run(check_id);
}

std::vector<CheckReport> run_all(const VerifyOptions& options) {
  Verifier v(options);
  return v.run_all();
}

json report_json(const CheckReport& r) {
  json j;
  j["check_id"] = r.check_id;
  j["subject"] = r.subject;
  j["verdict"] = r.pass ? "PASS" : "FAIL";
  j["summary"] = r.summary;
  j["evidence"] = r.evidence;
  if (!r.subreports.empty()) {
    j["subreports"] = json::array();
    for (const auto& s : r.subreports) j["subreports"].push_back(report_json(s));
  }
  return j;
}

json reports_document(const std::vector<CheckReport>& reports) {
  json doc;
  doc["data"] = json::array();
  doc["timings"] = json::object();
  for (const auto& r : reports) {
    doc["data"].push_back(report_json(r));
    doc["timings"][r.check_id] = r.elapsed_seconds;
  }
  return doc;
}

}  // namespace powerclaw
