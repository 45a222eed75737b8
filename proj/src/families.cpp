#include "powerclaw/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "powerclaw/finite_field.hpp"
#include "powerclaw/numtheory.hpp"

namespace powerclaw {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

void require_order(std::uint64_t order, const GroupLimits& limits, const std::string& what) {
  if (order > limits.max_order) {
    throw CapExceeded(what + " has order " + str(order) + ", above the element cap of " + str(limits.max_order));
  }
}

void check_order(const Group& g, std::uint64_t expected) {
  if (g.order() != expected) {
    throw std::logic_error(g.label() + ": closure produced order " + str(g.order()) + ", expected " + str(expected));
  }
}

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

// <a, b | a^m, b^2 = a^square, b a b^-1 = a^r>, codes i + m*j for a^i b^j.
Group metacyclic_2(std::uint64_t m, std::uint64_t r, std::uint64_t square, const GroupLimits& limits,
                   std::string label) {
  const auto order = static_cast<std::uint32_t>(2 * m);
  auto mul = [m, r, square](std::uint32_t x, std::uint32_t y) -> std::uint32_t {
    const std::uint64_t i = x % m, j = x / m, k = y % m, l = y / m;
    std::uint64_t exp = i + (j ? (r * k) % m : k);
    if (j && l) exp += square;
    return static_cast<std::uint32_t>(exp % m + m * ((j + l) % 2));
  };
  const std::uint32_t gens[] = {1, static_cast<std::uint32_t>(m)};
  return regular_group(order, mul, gens, limits, std::move(label));
}

using Vec = std::vector<FieldElement>;
using Matrix = std::vector<Vec>;

Vec apply(const FiniteField& f, const Matrix& m, const Vec& v) {
  Vec out(m.size(), f.zero());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] = f.add(out[i], f.mul(m[i][j], v[j]));
  }
  return out;
}

Matrix identity_matrix(const FiniteField& f, std::size_t n) {
  Matrix m(n, Vec(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = f.one();
  return m;
}

// Projective points: vectors whose first nonzero coordinate is 1.
struct ProjectiveSpace {
  const FiniteField* field;
  std::size_t dim;
  std::vector<Vec> points;
  std::map<std::vector<std::uint32_t>, Point> index;

  Vec normalize(Vec v) const {
    auto it = std::find_if(v.begin(), v.end(), [&](const FieldElement& x) { return !field->is_zero(x); });
    if (it == v.end()) throw std::logic_error("zero vector has no projective point");
    const FieldElement s = field->inv(*it);
    for (auto& x : v) x = field->mul(x, s);
    return v;
  }

  std::vector<std::uint32_t> key(const Vec& v) const {
    std::vector<std::uint32_t> k;
    for (const auto& x : v) k.push_back(field->encode(x));
    return k;
  }

  void add(const Vec& v) {
    const auto k = key(v);
    if (index.count(k)) return;
    index.emplace(k, static_cast<Point>(points.size()));
    points.push_back(v);
  }

  Point locate(const Vec& v) const { return index.at(key(normalize(v))); }

  Permutation action(const Matrix& m) const {
    Permutation p(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) p[i] = locate(apply(*field, m, points[i]));
    return p;
  }
};

ProjectiveSpace all_points(const FiniteField& f, std::size_t dim) {
  ProjectiveSpace space{&f, dim, {}, {}};
  const std::uint32_t q = f.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= q;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec v(dim);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = f.decode(static_cast<std::uint32_t>(c % q));
      c /= q;
    }
    space.add(space.normalize(v));
  }
  return space;
}

// Elementary transvections I + t E_ij, t over the polynomial basis of GF(q).
std::vector<Matrix> transvections(const FiniteField& f, std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (unsigned b = 0; b < f.degree(); ++b) {
        Matrix m = identity_matrix(f, n);
        m[i][j] = f.basis(b);
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

FiniteField field_for(std::uint64_t q, const std::string& who) {
  const auto pp = is_prime_power(q);
  if (!pp) throw std::invalid_argument(who + ": q = " + str(q) + " is not a prime power");
  if (q > kMaxFieldSize) throw std::invalid_argument(who + ": q = " + str(q) + " exceeds the field cap");
  return make_field(static_cast<std::uint32_t>(pp->prime), pp->exponent);
}

}  // namespace

Group regular_group(std::uint32_t order, const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul,
                    std::span<const std::uint32_t> generator_codes, const GroupLimits& limits, std::string label) {
  require_order(order, limits, label);
  if (order > kMaxDegree) throw CapExceeded(label + ": regular representation needs more than 65535 points");
  std::vector<Permutation> gens;
  for (std::uint32_t s : generator_codes) {
    Permutation p(order);
    for (std::uint32_t x = 0; x < order; ++x) p[x] = static_cast<Point>(mul(s, x));
    gens.push_back(std::move(p));
  }
  Group g = closure(order, gens, limits, std::move(label));
  check_order(g, order);
  return g;
}

Group cyclic(std::uint64_t n, const GroupLimits& limits) {
  const std::string label = "C(" + str(n) + ")";
  if (n == 0) throw std::invalid_argument("C(n) needs n >= 1");
  require_order(n, limits, label);
  if (n > kMaxDegree) throw CapExceeded(label + ": more than 65535 points");
  Permutation r(n);
  for (std::uint64_t x = 0; x < n; ++x) r[x] = static_cast<Point>((x + 1) % n);
  const std::vector<Permutation> gens{r};
  Group g = closure(n, gens, limits, label);
  check_order(g, n);
  return g;
}

Group direct_product(const Group& g, const Group& h, const GroupLimits& limits) {
  const std::string label = g.label() + "x" + h.label();
  const std::uint64_t order = static_cast<std::uint64_t>(g.order()) * h.order();
  require_order(order, limits, label);
  const std::size_t dg = g.degree();
  const std::size_t n = dg + h.degree();
  if (n > kMaxDegree) throw CapExceeded(label + ": more than 65535 points");
  std::vector<Permutation> gens;
  for (const auto& p : g.generator_permutations()) {
    Permutation q = identity_permutation(n);
    std::copy(p.begin(), p.end(), q.begin());
    gens.push_back(std::move(q));
  }
  for (const auto& p : h.generator_permutations()) {
    Permutation q = identity_permutation(n);
    for (std::size_t x = 0; x < p.size(); ++x) q[dg + x] = static_cast<Point>(dg + p[x]);
    gens.push_back(std::move(q));
  }
  Group out = closure(n, gens, limits, label);
  check_order(out, order);
  return out;
}

Group dihedral(std::uint64_t n, const GroupLimits& limits) {
  const std::string label = "D(" + str(n) + ")";
  if (n < 4 || n % 2 != 0) throw std::invalid_argument(label + ": order must be even and at least 4");
  require_order(n, limits, label);
  const std::uint64_t m = n / 2;
  if (m + 2 > kMaxDegree) throw CapExceeded(label + ": too many points");
  // rotation and reflection on m points, plus a marker pair swapped by the reflection
  Permutation r = identity_permutation(m + 2);
  Permutation s = identity_permutation(m + 2);
  for (std::uint64_t x = 0; x < m; ++x) {
    r[x] = static_cast<Point>((x + 1) % m);
    s[x] = static_cast<Point>((m - x) % m);
  }
  s[m] = static_cast<Point>(m + 1);
  s[m + 1] = static_cast<Point>(m);
  const std::vector<Permutation> gens{r, s};
  Group g = closure(m + 2, gens, limits, label);
  check_order(g, n);
  return g;
}

Group generalized_quaternion(std::uint64_t n, const GroupLimits& limits) {
  const std::string label = "Q(" + str(n) + ")";
  if (!is_power_of_two(n) || n < 8) throw std::invalid_argument(label + ": order must be a power of 2, at least 8");
  require_order(n, limits, label);
  const std::uint64_t m = n / 2;
  return metacyclic_2(m, m - 1, m / 2, limits, label);
}

Group semidihedral(std::uint64_t n, const GroupLimits& limits) {
  const std::string label = "SD(" + str(n) + ")";
  if (!is_power_of_two(n) || n < 16) throw std::invalid_argument(label + ": order must be a power of 2, at least 16");
  require_order(n, limits, label);
  const std::uint64_t m = n / 2;
  return metacyclic_2(m, m / 2 - 1, 0, limits, label);
}

Group modular16(const GroupLimits& limits) { return metacyclic_2(8, 5, 0, limits, "Mod16"); }

Group extraspecial_p3(std::uint64_t p, int exponent_flag, const GroupLimits& limits) {
  const std::string label = "X(" + str(p) + "," + std::to_string(exponent_flag) + ")";
  if (!is_prime(p)) throw std::invalid_argument(label + ": p must be prime");
  if (p == 2) throw std::invalid_argument(label + ": p = 2 is not supported; use D(8), Q(8) or Mod16");
  if (exponent_flag != 1 && exponent_flag != 2) throw std::invalid_argument(label + ": exponent flag must be 1 or 2");
  require_order(p * p * p, limits, label);
  if (exponent_flag == 2) {
    Group g = semidirect_cyclic(p * p, p, p + 1, limits);
    g.set_label(label);
    return g;
  }
  // Heisenberg group mod p: (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b').
  const std::uint64_t pp = p * p;
  auto mul = [p, pp](std::uint32_t x, std::uint32_t y) -> std::uint32_t {
    const std::uint64_t a = x % p, b = (x / p) % p, c = x / pp;
    const std::uint64_t a2 = y % p, b2 = (y / p) % p, c2 = y / pp;
    return static_cast<std::uint32_t>((a + a2) % p + p * ((b + b2) % p) + pp * ((c + c2 + a * b2) % p));
  };
  const std::uint32_t gens[] = {1, static_cast<std::uint32_t>(p)};
  return regular_group(static_cast<std::uint32_t>(pp * p), mul, gens, limits, label);
}

std::optional<std::uint64_t> auto_action_exponent(std::uint64_t n, std::uint64_t m) {
  if (n == 0 || m == 0) return std::nullopt;
  if (n == 1) return 1;
  for (std::uint64_t k = 1; k < n; ++k) {
    if (std::gcd(k, n) != 1 || pow_mod(k, m, n) != 1) continue;
    bool fixed_point_free = true;
    for (std::uint64_t b = 1; b < m && fixed_point_free; ++b) {
      const std::uint64_t t = (pow_mod(k, b, n) + n - 1) % n;
      fixed_point_free = std::gcd(t, n) == 1;
    }
    if (fixed_point_free) return k;
  }
  return std::nullopt;
}

Group semidirect_cyclic(std::uint64_t n, std::uint64_t m, std::uint64_t k, const GroupLimits& limits) {
  const std::string label = "Semi(" + str(n) + "," + str(m) + "," + str(k) + ")";
  if (n == 0 || m == 0) throw std::invalid_argument(label + ": n and m must be positive");
  if (std::gcd(k % n, n) != 1 && n > 1) throw std::invalid_argument(label + ": gcd(k, n) must be 1");
  if (pow_mod(k, m, n) != 1 % n) throw std::invalid_argument(label + ": k^m must be 1 mod n");
  require_order(n * m, limits, label);

  // Z_n splits into its prime-power components; the affine maps x -> a + k^b x
  // act on each, and b is recorded by a rotation of m extra points.
  std::vector<std::uint64_t> parts;
  for (const auto& f : factorize(n).factors) parts.push_back(*checked_pow(f.prime, f.exponent));
  std::uint64_t degree = m;
  for (auto part : parts) degree += part;
  if (degree > kMaxDegree) throw CapExceeded(label + ": too many points");

  Permutation x = identity_permutation(degree);
  Permutation y = identity_permutation(degree);
  std::uint64_t offset = 0;
  for (auto part : parts) {
    for (std::uint64_t v = 0; v < part; ++v) {
      x[offset + v] = static_cast<Point>(offset + (v + 1) % part);
      y[offset + v] = static_cast<Point>(offset + (v * (k % part)) % part);
    }
    offset += part;
  }
  for (std::uint64_t v = 0; v < m; ++v) y[offset + v] = static_cast<Point>(offset + (v + 1) % m);
  const std::vector<Permutation> gens{x, y};
  Group g = closure(degree, gens, limits, label);
  check_order(g, n * m);
  return g;
}

Group elementary_abelian(std::uint64_t p, unsigned k, const GroupLimits& limits) {
  const std::string label = "E(" + str(p) + "," + std::to_string(k) + ")";
  if (!is_prime(p)) throw std::invalid_argument(label + ": p must be prime");
  if (k == 0) throw std::invalid_argument(label + ": k must be positive");
  const auto order = checked_pow(p, k);
  if (!order || *order > limits.max_order) throw CapExceeded(label + " exceeds the element cap");
  if (p * k > kMaxDegree) throw CapExceeded(label + ": too many points");
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < k; ++i) {
    Permutation g = identity_permutation(p * k);
    for (std::uint64_t v = 0; v < p; ++v) g[i * p + v] = static_cast<Point>(i * p + (v + 1) % p);
    gens.push_back(std::move(g));
  }
  Group g = closure(p * k, gens, limits, label);
  check_order(g, *order);
  return g;
}

Group suzuki_2group(std::uint64_t q, const GroupLimits& limits) {
  const std::string label = "Sz2(" + str(q) + ")";
  const auto pp = is_prime_power(q);
  if (!pp || pp->prime != 2 || pp->exponent % 2 == 0 || pp->exponent < 3) {
    throw std::invalid_argument(label + ": q must be 2^(2k+1) with k >= 1");
  }
  require_order(q * q, limits, label);
  if (q * q > kMaxDegree) throw CapExceeded(label + ": regular representation too large");
  const FiniteField field = make_field(2, pp->exponent);
  const auto qq = static_cast<std::uint32_t>(q);
  std::vector<std::uint32_t> twist(qq);
  std::vector<std::uint32_t> product(static_cast<std::size_t>(qq) * qq);
  for (std::uint32_t a = 0; a < qq; ++a) {
    twist[a] = field.encode(suzuki_twist(field, field.decode(a)));
    for (std::uint32_t c = 0; c < qq; ++c) product[a * qq + c] = field.encode(field.mul(field.decode(a), field.decode(c)));
  }
  // characteristic 2: addition of codes is xor
  auto mul = [&](std::uint32_t x, std::uint32_t y) -> std::uint32_t {
    const std::uint32_t a = x % qq, b = x / qq, c = y % qq, d = y / qq;
    return (a ^ c) + qq * (b ^ d ^ product[twist[a] * qq + c]);
  };
  std::vector<std::uint32_t> gens;
  for (unsigned i = 0; i < field.degree(); ++i) {
    const std::uint32_t e = field.encode(field.basis(i));
    gens.push_back(e);
    gens.push_back(qq * e);
  }
  return regular_group(qq * qq, mul, gens, limits, label);
}

Group psl2(std::uint64_t q, const GroupLimits& limits) {
  const std::string label = "PSL(2," + str(q) + ")";
  const FiniteField field = field_for(q, label);
  const std::uint64_t expected = q * (q * q - 1) / std::gcd(q - 1, std::uint64_t{2});
  require_order(expected, limits, label);
  const ProjectiveSpace line = all_points(field, 2);
  std::vector<Permutation> gens;
  for (const auto& t : transvections(field, 2)) gens.push_back(line.action(t));
  Group g = closure(line.points.size(), gens, limits, label);
  check_order(g, expected);
  return g;
}

Group sl2(std::uint64_t q, const GroupLimits& limits) {
  const std::string label = "SL(2," + str(q) + ")";
  const FiniteField field = field_for(q, label);
  const std::uint64_t expected = q * (q * q - 1);
  require_order(expected, limits, label);
  const std::uint32_t qq = field.size();
  const std::uint64_t npoints = static_cast<std::uint64_t>(qq) * qq - 1;
  if (npoints > kMaxDegree) throw CapExceeded(label + ": too many points");
  if (expected * npoints > limits.max_storage) throw CapExceeded(label + " exceeds the storage cap");
  auto vec_of = [&](std::uint32_t idx) { return Vec{field.decode((idx + 1) % qq), field.decode((idx + 1) / qq)}; };
  auto idx_of = [&](const Vec& v) { return static_cast<Point>(field.encode(v[0]) + qq * field.encode(v[1]) - 1); };
  std::vector<Permutation> gens;
  for (const auto& t : transvections(field, 2)) {
    Permutation p(npoints);
    for (std::uint32_t i = 0; i < npoints; ++i) p[i] = idx_of(apply(field, t, vec_of(i)));
    gens.push_back(std::move(p));
  }
  Group g = closure(npoints, gens, limits, label);
  check_order(g, expected);
  return g;
}

Group psl3(std::uint64_t q, const GroupLimits& limits) {
  const std::string label = "PSL(3," + str(q) + ")";
  if (q != 3 && q != 4) throw std::invalid_argument(label + ": only q = 3 and q = 4 are supported");
  const FiniteField field = field_for(q, label);
  const std::uint64_t expected = q * q * q * (q * q * q - 1) * (q * q - 1) / std::gcd(q - 1, std::uint64_t{3});
  require_order(expected, limits, label);
  const ProjectiveSpace plane = all_points(field, 3);
  std::vector<Permutation> gens;
  for (const auto& t : transvections(field, 3)) gens.push_back(plane.action(t));
  Group g = closure(plane.points.size(), gens, limits, label);
  check_order(g, expected);
  return g;
}

Group psu3_3(const GroupLimits& limits) {
  const std::string label = "PSU(3,3)";
  require_order(6048, limits, label);
  const FiniteField field = make_field(3, 2);
  auto conj = [&](const FieldElement& a) { return field.pow(a, 3); };
  // Hermitian form h(u, v) = u1 conj(v3) + u2 conj(v2) + u3 conj(v1).
  auto form = [&](const Vec& u, const Vec& v) {
    FieldElement s = field.zero();
    for (std::size_t i = 0; i < 3; ++i) s = field.add(s, field.mul(u[i], conj(v[2 - i])));
    return s;
  };
  auto preserves_form = [&](const Matrix& m) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        Vec ei(3, field.zero()), ej(3, field.zero());
        ei[i] = field.one();
        ej[j] = field.one();
        if (!(form(apply(field, m, ei), apply(field, m, ej)) == form(ei, ej))) return false;
      }
    }
    return true;
  };

  ProjectiveSpace isotropic{&field, 3, {}, {}};
  for (const auto& v : all_points(field, 3).points) {
    if (field.is_zero(form(v, v))) isotropic.add(v);
  }
  if (isotropic.points.size() != 28) throw std::logic_error("PSU(3,3): expected 28 isotropic points");

  // The unitary upper and lower unitriangular matrices generate SU(3,3).
  std::vector<Permutation> gens;
  const std::uint32_t q = field.size();
  for (bool upper : {true, false}) {
    for (std::uint32_t code = 1; code < q * q * q; ++code) {
      Matrix m = identity_matrix(field, 3);
      const FieldElement a = field.decode(code % q), b = field.decode((code / q) % q), c = field.decode(code / (q * q));
      if (upper) {
        m[0][1] = a, m[0][2] = b, m[1][2] = c;
      } else {
        m[1][0] = a, m[2][0] = b, m[2][1] = c;
      }
      if (preserves_form(m)) gens.push_back(isotropic.action(m));
    }
  }
  Group g = closure(isotropic.points.size(), gens, limits, label);
  check_order(g, 6048);
  return g;
}

Group m11(const GroupLimits& limits) {
  require_order(7920, limits, "M11");
  // (1,2,...,11) and (3,7,11,8)(4,10,5,6), shifted to 0-based points
  Permutation a(11), b = identity_permutation(11);
  for (Point x = 0; x < 11; ++x) a[x] = static_cast<Point>((x + 1) % 11);
  const std::vector<std::vector<Point>> cycles{{2, 6, 10, 7}, {3, 9, 4, 5}};
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) b[c[i]] = c[(i + 1) % c.size()];
  }
  const std::vector<Permutation> gens{a, b};
  Group g = closure(11, gens, limits, "M11");
  check_order(g, 7920);
  return g;
}

Group agl3_2(const GroupLimits& limits) {
  require_order(1344, limits, "AGL(3,2)");
  std::vector<Permutation> gens;
  Permutation t(8);
  for (Point v = 0; v < 8; ++v) t[v] = static_cast<Point>(v ^ 1);
  gens.push_back(t);
  for (unsigned i = 0; i < 3; ++i) {
    for (unsigned j = 0; j < 3; ++j) {
      if (i == j) continue;
      Permutation m(8);
      for (Point v = 0; v < 8; ++v) m[v] = static_cast<Point>(((v >> j) & 1) ? v ^ (1u << i) : v);
      gens.push_back(std::move(m));
    }
  }
  Group g = closure(8, gens, limits, "AGL(3,2)");
  check_order(g, 1344);
  return g;
}

}  // namespace powerclaw
