#include "nichols/racks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace nichols {

RackCheck is_rack(const RackTable& table) {
  const std::size_t n = table.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n)
      return {false, "row " + std::to_string(x) + " has wrong length", {static_cast<RackElement>(x)}};
    std::vector<bool> hit(n, false);
    for (std::size_t y = 0; y < n; ++y) {
      const auto v = table[x][y];
      if (v >= n) return {false, "entry out of range", {static_cast<RackElement>(x), static_cast<RackElement>(y)}};
      if (hit[v])
        return {false, "x|>- is not a bijection", {static_cast<RackElement>(x), static_cast<RackElement>(y)}};
      hit[v] = true;
    }
  }
  for (RackElement x = 0; x < n; ++x)
    for (RackElement y = 0; y < n; ++y)
      for (RackElement z = 0; z < n; ++z)
        if (table[x][table[y][z]] != table[table[x][y]][table[x][z]])
          return {false, "self-distributivity fails", {x, y, z}};
  return {};
}

Rack::Rack(RackTable table, std::vector<std::string> labels, std::string provenance)
    : table_(std::move(table)), labels_(std::move(labels)), provenance_(std::move(provenance)) {
  if (table_.empty()) throw InputError("a rack must be nonempty");
  if (auto chk = is_rack(table_); !chk.ok) throw InputError("not a rack: " + chk.message);
  const std::size_t n = table_.size();
  if (labels_.empty())
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  if (labels_.size() != n) throw InputError("label count does not match rack size");
  inverse_.assign(n, std::vector<RackElement>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) inverse_[x][table_[x][y]] = static_cast<RackElement>(y);
}

std::optional<RackElement> Rack::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<RackElement>(i);
  return std::nullopt;
}

bool Rack::is_abelian() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if (table_[x][y] != y) return false;
  return true;
}

Rack conjugacy_class_rack(const PermGroup& group, const Permutation& x, std::size_t cap) {
  if (!group.contains(x)) throw InputError("element not in group: " + x.to_cycle_string());
  auto cls = group.conjugacy_class(x, cap);
  std::map<Permutation, RackElement> index;
  for (std::size_t i = 0; i < cls.size(); ++i) index[cls[i]] = static_cast<RackElement>(i);
  RackTable table(cls.size(), std::vector<RackElement>(cls.size()));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < cls.size(); ++a) {
    labels.push_back(cls[a].to_cycle_string());
    for (std::size_t b = 0; b < cls.size(); ++b) table[a][b] = index.at(cls[b].conjugate_by(cls[a]));
  }
  Rack r(std::move(table), std::move(labels), "conjugacy class of " + x.to_cycle_string());
  r.perms_ = std::move(cls);
  return r;
}

namespace {

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

Rack affine_rack(const std::vector<unsigned>& moduli, const std::vector<std::vector<long>>& matrix) {
  const std::size_t r = moduli.size();
  if (r == 0) throw InputError("affine rack needs at least one modulus");
  if (matrix.size() != r) throw InputError("matrix size does not match moduli");
  std::size_t order = 1;
  for (auto m : moduli) {
    if (m == 0) throw InputError("moduli must be positive");
    order *= m;
    if (order > 1'000'000) throw BudgetExceeded("affine group too large");
  }
  for (std::size_t s = 0; s < r; ++s) {
    if (matrix[s].size() != r) throw InputError("matrix must be square");
    for (std::size_t t = 0; t < r; ++t)
      if ((matrix[s][t] * static_cast<long>(moduli[t])) % static_cast<long>(moduli[s]) != 0)
        throw InputError("matrix does not define an endomorphism of the group");
  }
  auto decode = [&](std::size_t idx) {
    std::vector<long> v(r);
    for (std::size_t t = 0; t < r; ++t) {
      v[t] = static_cast<long>(idx % moduli[t]);
      idx /= moduli[t];
    }
    return v;
  };
  auto encode = [&](const std::vector<long>& v) {
    std::size_t idx = 0;
    for (std::size_t t = r; t-- > 0;) idx = idx * moduli[t] + static_cast<std::size_t>(mod(v[t], moduli[t]));
    return idx;
  };
  auto apply = [&](const std::vector<long>& v) {
    std::vector<long> w(r, 0);
    for (std::size_t s = 0; s < r; ++s) {
      long acc = 0;
      for (std::size_t t = 0; t < r; ++t) acc += matrix[s][t] * v[t];
      w[s] = mod(acc, moduli[s]);
    }
    return w;
  };
  std::vector<std::vector<long>> g_of(order);
  std::vector<bool> hit(order, false);
  for (std::size_t i = 0; i < order; ++i) {
    g_of[i] = apply(decode(i));
    const auto e = encode(g_of[i]);
    if (hit[e]) throw InputError("affine rack: automorphism is not invertible");
    hit[e] = true;
  }
  RackTable table(order, std::vector<RackElement>(order));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < order; ++a) {
    const auto va = decode(a);
    const auto& ga = g_of[a];
    std::string lab;
    if (r == 1) {
      lab = std::to_string(va[0]);
    } else {
      lab = "(";
      for (std::size_t t = 0; t < r; ++t) lab += (t ? "," : "") + std::to_string(va[t]);
      lab += ")";
    }
    labels.push_back(lab);
    for (std::size_t b = 0; b < order; ++b) {
      const auto& gb = g_of[b];
      std::vector<long> w(r);
      for (std::size_t t = 0; t < r; ++t) w[t] = gb[t] + va[t] - ga[t];
      table[a][b] = static_cast<RackElement>(encode(w));
    }
  }
  return Rack(std::move(table), std::move(labels), "affine");
}

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Remainder of a modulo b over F_p (b monic); polynomials low to high.
std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& b, long p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    const long c = mod(a[i], p);
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = mod(a[i - db + j] - c * b[j], p);
  }
  a.resize(std::min(a.size(), db));
  for (auto& v : a) v = mod(v, p);
  return a;
}

bool irreducible_mod_p(const std::vector<long>& f, unsigned p) {
  const std::size_t t = f.size() - 1;
  if (t <= 1) return true;
  // Trial division by every monic polynomial of degree 1..t/2.
  for (std::size_t d = 1; d <= t / 2; ++d) {
    std::vector<long> g(d + 1, 0);
    g[d] = 1;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < d; ++i) combos *= p;
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<long>(c % p);
        c /= p;
      }
      auto rem = poly_mod(f, g, p);
      if (std::all_of(rem.begin(), rem.end(), [](long v) { return v == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

Rack field_affine_rack(unsigned q, const std::string& multiplier) {
  if (q == 4) {
    if (multiplier != "w" && multiplier != "w2")
      throw InputError("X_{4,N} supports N = w or w2");
    // F_4 = F_2[w]/(w^2 + w + 1), coordinates (a, b) = a + b w.
    const std::vector<std::vector<long>> mult_w = {{0, 1}, {1, 1}};
    const std::vector<std::vector<long>> mult_w2 = {{1, 1}, {1, 0}};
    Rack r = affine_rack({2, 2}, multiplier == "w" ? mult_w : mult_w2);
    RackTable t = r.table();
    return Rack(std::move(t), {"0", "1", "w", "w2"}, "X_{4," + multiplier + "}");
  }
  if (!is_prime(q)) throw InputError("field_affine_rack: q must be prime or 4");
  long n = 0;
  try {
    n = std::stol(multiplier);
  } catch (const std::exception&) {
    throw InputError("multiplier must be an integer for prime q");
  }
  if (mod(n, q) == 0) throw InputError("multiplier must be nonzero in F_q");
  Rack r = affine_rack({q}, {{mod(n, q)}});
  RackTable t = r.table();
  std::vector<std::string> labels = r.labels();
  return Rack(std::move(t), std::move(labels),
              "X_{" + std::to_string(q) + "," + std::to_string(mod(n, q)) + "}");
}

Rack simple_affine_rack(unsigned p, const std::vector<long>& monic_coeffs) {
  if (!is_prime(p)) throw InputError("simple_affine_rack: p must be prime");
  if (monic_coeffs.size() < 2) throw InputError("polynomial must have degree >= 1");
  if (mod(monic_coeffs.back(), p) != 1) throw InputError("polynomial must be monic");
  const std::size_t t = monic_coeffs.size() - 1;
  if (t == 1) {
    const long c0 = mod(monic_coeffs[0], p);
    if (c0 == 0) throw InputError("f = X is excluded");
    if (c0 == static_cast<long>(p) - 1) throw InputError("f = X - 1 is excluded");
  }
  if (!irreducible_mod_p(monic_coeffs, p)) throw InputError("polynomial is reducible over F_p");
  std::vector<std::vector<long>> companion(t, std::vector<long>(t, 0));
  for (std::size_t k = 0; k + 1 < t; ++k) companion[k + 1][k] = 1;
  for (std::size_t s = 0; s < t; ++s) companion[s][t - 1] = mod(-monic_coeffs[s], p);
  Rack r = affine_rack(std::vector<unsigned>(t, p), companion);
  RackTable tab = r.table();
  auto labels = r.labels();
  return Rack(std::move(tab), std::move(labels), "simple affine over F_" + std::to_string(p));
}

Rack abelian_rack(std::size_t n) {
  RackTable t(n, std::vector<RackElement>(n));
  for (auto& row : t) std::iota(row.begin(), row.end(), 0u);
  return Rack(std::move(t), {}, "abelian");
}

Rack disjoint_union(const Rack& a, const Rack& b) {
  const std::size_t n = a.size() + b.size();
  RackTable t(n, std::vector<RackElement>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const bool xa = x < a.size(), ya = y < a.size();
      if (xa && ya) t[x][y] = a.op(static_cast<RackElement>(x), static_cast<RackElement>(y));
      else if (!xa && !ya)
        t[x][y] = static_cast<RackElement>(
            a.size() + b.op(static_cast<RackElement>(x - a.size()), static_cast<RackElement>(y - a.size())));
      else t[x][y] = static_cast<RackElement>(y);
    }
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back("'" + l);
  return Rack(std::move(t), std::move(labels), "disjoint union");
}

ElementSet subrack_generated(const Rack& x, const ElementSet& s) {
  std::vector<bool> in(x.size(), false);
  ElementSet members;
  for (auto e : s) {
    if (e >= x.size()) throw InputError("element out of range");
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
    }
  }
  // Each new element is combined with everything seen so far, both ways.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const RackElement a = members[i];
    for (std::size_t j = 0; j <= i; ++j) {
      const RackElement b = members[j];
      for (RackElement v : {x.op(a, b), x.op(b, a)}) {
        if (!in[v]) {
          in[v] = true;
          members.push_back(v);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<ElementSet> inner_orbits(const Rack& x, const ElementSet& y) {
  std::vector<int> orbit_of(x.size(), -1);
  std::vector<ElementSet> orbits;
  for (auto start : y) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    ElementSet orb{start};
    orbit_of[start] = id;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (auto g : y) {
        const auto v = x.op(g, orb[i]);
        if (orbit_of[v] < 0) {
          orbit_of[v] = id;
          orb.push_back(v);
        }
      }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

std::optional<Decomposition> decompose(const Rack& x, std::size_t cap) {
  if (x.size() > cap) throw BudgetExceeded("rack larger than decomposition cap");
  ElementSet all(x.size());
  std::iota(all.begin(), all.end(), 0u);
  auto orbits = inner_orbits(x, all);
  if (orbits.size() < 2) return std::nullopt;
  Decomposition d;
  d.r = orbits[0];
  for (std::size_t i = 1; i < orbits.size(); ++i) d.s.insert(d.s.end(), orbits[i].begin(), orbits[i].end());
  std::sort(d.s.begin(), d.s.end());
  return d;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none (restricted search)";
    case SearchStatus::budget_exceeded: return "undecided (budget exceeded)";
  }
  return "?";
}

namespace {

bool closed_under_op(const Rack& x, const ElementSet& s) {
  std::vector<bool> in(x.size(), false);
  for (auto e : s) in[e] = true;
  for (auto a : s)
    for (auto b : s)
      if (!in[x.op(a, b)]) return false;
  return true;
}

bool acts_onto(const Rack& x, const ElementSet& from, const ElementSet& onto) {
  std::vector<bool> in(x.size(), false);
  for (auto e : onto) in[e] = true;
  for (auto a : from) {
    std::vector<bool> hit(x.size(), false);
    for (auto b : onto) {
      const auto v = x.op(a, b);
      if (!in[v] || hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

bool contains(const ElementSet& s, RackElement e) { return std::binary_search(s.begin(), s.end(), e); }

bool disjoint(const ElementSet& a, const ElementSet& b) {
  for (auto e : a)
    if (contains(b, e)) return false;
  return true;
}

}  // namespace

bool verify_type_D(const Rack& x, const TypeDWitness& w) {
  const auto& r = w.parts.r;
  const auto& s = w.parts.s;
  if (r.empty() || s.empty() || !disjoint(r, s)) return false;
  ElementSet y = r;
  y.insert(y.end(), s.begin(), s.end());
  std::sort(y.begin(), y.end());
  if (y != w.subrack) return false;
  if (!closed_under_op(x, r) || !closed_under_op(x, s)) return false;
  if (!acts_onto(x, r, s) || !acts_onto(x, s, r)) return false;
  if (!contains(r, w.r) || !contains(s, w.s)) return false;
  return x.op(w.r, x.op(w.s, x.op(w.r, w.s))) != w.s;
}

bool verify_type_F(const Rack& x, const TypeFWitness& w) {
  if (w.elements.size() != 4 || w.subracks.size() != 4) return false;
  for (std::size_t a = 0; a < 4; ++a) {
    if (w.subracks[a].empty() || !closed_under_op(x, w.subracks[a])) return false;
    if (!contains(w.subracks[a], w.elements[a])) return false;
    for (std::size_t b = 0; b < 4; ++b) {
      if (a == b) continue;
      if (!disjoint(w.subracks[a], w.subracks[b])) return false;
      if (!acts_onto(x, w.subracks[a], w.subracks[b])) return false;
      if (x.op(w.elements[a], w.elements[b]) == w.elements[b]) return false;
    }
  }
  return true;
}

TypeDResult is_type_D(const Rack& x, const Budget& budget) {
  BudgetClock clock(budget);
  TypeDResult res;
  const auto n = static_cast<RackElement>(x.size());
  for (RackElement r = 0; r < n; ++r) {
    for (RackElement s = 0; s < n; ++s) {
      if (r == s) continue;
      ++res.candidates_examined;
      if (clock.entries_exceeded(res.candidates_examined) ||
          ((res.candidates_examined & 0xff) == 0 && clock.time_exceeded())) {
        res.status = SearchStatus::budget_exceeded;
        return res;
      }
      if (x.op(r, x.op(s, x.op(r, s))) == s) continue;
      const auto y = subrack_generated(x, {std::min(r, s), std::max(r, s)});
      const auto orbits = inner_orbits(x, y);
      const auto& orb_r = *std::find_if(orbits.begin(), orbits.end(),
                                        [&](const ElementSet& o) { return contains(o, r); });
      if (contains(orb_r, s)) continue;
      TypeDWitness w;
      w.r = r;
      w.s = s;
      w.subrack = y;
      w.parts.r = orb_r;
      for (auto e : y)
        if (!contains(orb_r, e)) w.parts.s.push_back(e);
      if (!verify_type_D(x, w)) continue;
      res.status = SearchStatus::found;
      res.witness = std::move(w);
      return res;
    }
  }
  res.status = SearchStatus::none;
  return res;
}

TypeFResult is_type_F(const Rack& x, const Budget& budget) {
  BudgetClock clock(budget);
  TypeFResult res;
  const auto n = static_cast<RackElement>(x.size());
  // A pair can only end up in distinct orbits of a larger subrack if it
  // already lies in distinct orbits of the subrack it generates.
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
  for (RackElement a = 0; a < n; ++a)
    for (RackElement b = a + 1; b < n; ++b) {
      if (x.op(a, b) == b || x.op(b, a) == a) continue;
      const auto y = subrack_generated(x, {a, b});
      const auto orbits = inner_orbits(x, y);
      bool same = false;
      for (const auto& o : orbits)
        if (contains(o, a) && contains(o, b)) same = true;
      ok[a][b] = ok[b][a] = !same;
    }
  std::vector<RackElement> pick(4);
  std::function<bool(std::size_t, RackElement)> rec = [&](std::size_t depth, RackElement from) -> bool {
    if (depth == 4) {
      ++res.candidates_examined;
      if (clock.entries_exceeded(res.candidates_examined) ||
          ((res.candidates_examined & 0x3f) == 0 && clock.time_exceeded())) {
        res.status = SearchStatus::budget_exceeded;
        return true;
      }
      ElementSet gens(pick.begin(), pick.end());
      const auto y = subrack_generated(x, gens);
      const auto orbits = inner_orbits(x, y);
      TypeFWitness w;
      w.elements = pick;
      for (auto r : pick)
        w.subracks.push_back(*std::find_if(orbits.begin(), orbits.end(),
                                           [&](const ElementSet& o) { return contains(o, r); }));
      if (!verify_type_F(x, w)) return false;
      res.status = SearchStatus::found;
      res.witness = std::move(w);
      return true;
    }
    for (RackElement c = from; c < n; ++c) {
      bool good = true;
      for (std::size_t k = 0; k < depth && good; ++k) good = ok[pick[k]][c];
      if (!good) continue;
      pick[depth] = c;
      if (rec(depth + 1, c + 1)) return true;
    }
    return false;
  };
  if (!rec(0, 0)) res.status = SearchStatus::none;
  return res;
}

namespace {

struct ElementProfile {
  std::size_t fixed_points;
  bool idempotent;
  std::size_t order;
  auto operator<=>(const ElementProfile&) const = default;
};

ElementProfile profile(const Rack& r, RackElement x) {
  ElementProfile p{0, r.op(x, x) == x, 1};
  for (RackElement y = 0; y < r.size(); ++y)
    if (r.op(x, y) == y) ++p.fixed_points;
  std::vector<bool> seen(r.size(), false);
  for (RackElement y = 0; y < r.size(); ++y) {
    if (seen[y]) continue;
    std::size_t len = 0;
    for (RackElement z = y; !seen[z]; z = r.op(x, z)) {
      seen[z] = true;
      ++len;
    }
    p.order = std::lcm(p.order, len);
  }
  return p;
}

}  // namespace

bool rack_isomorphic(const Rack& a, const Rack& b, std::size_t cap) {
  if (a.size() > cap || b.size() > cap) throw BudgetExceeded("rack larger than isomorphism cap");
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::vector<ElementProfile> pa(n), pb(n);
  for (RackElement x = 0; x < n; ++x) {
    pa[x] = profile(a, x);
    pb[x] = profile(b, x);
  }
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  constexpr RackElement unset = ~RackElement{0};
  std::vector<RackElement> f(n, unset), finv(n, unset);

  // Assigns f(x) = y and propagates through the operation; returns the
  // assignments made so they can be undone, or nullopt on conflict.
  auto assign = [&](RackElement x, RackElement y) -> std::optional<std::vector<RackElement>> {
    std::vector<RackElement> made;
    std::vector<std::pair<RackElement, RackElement>> work{{x, y}};
    auto fail = [&] {
      for (auto m : made) {
        finv[f[m]] = unset;
        f[m] = unset;
      }
    };
    while (!work.empty()) {
      auto [u, v] = work.back();
      work.pop_back();
      if (f[u] == v) continue;
      if (f[u] != unset || finv[v] != unset || pa[u] != pb[v]) {
        fail();
        return std::nullopt;
      }
      f[u] = v;
      finv[v] = u;
      made.push_back(u);
      for (auto w : made) {
        work.emplace_back(a.op(u, w), b.op(v, f[w]));
        work.emplace_back(a.op(w, u), b.op(f[w], v));
      }
    }
    return made;
  };

  std::function<bool()> rec = [&]() -> bool {
    RackElement x = 0;
    while (x < n && f[x] != unset) ++x;
    if (x == n) return true;
    for (RackElement y = 0; y < n; ++y) {
      if (finv[y] != unset) continue;
      auto made = assign(x, y);
      if (!made) continue;
      if (rec()) return true;
      for (auto m : *made) {
        finv[f[m]] = unset;
        f[m] = unset;
      }
    }
    return false;
  };
  return rec();
}

std::vector<std::size_t> congruence_generated(const Rack& x, RackElement a, RackElement b) {
  const std::size_t n = x.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> findp = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::pair<RackElement, RackElement>> pending{{a, b}};
  while (!pending.empty()) {
    auto [u, v] = pending.back();
    pending.pop_back();
    const auto ru = findp(u), rv = findp(v);
    if (ru == rv) continue;
    parent[ru] = rv;
    // A congruence must be compatible with both arguments of |>.
    for (RackElement w = 0; w < n; ++w) {
      pending.emplace_back(x.op(w, u), x.op(w, v));
      pending.emplace_back(x.op(u, w), x.op(v, w));
    }
  }
  std::vector<std::size_t> cls(n);
  for (std::size_t v = 0; v < n; ++v) cls[v] = findp(v);
  return cls;
}

bool is_simple(const Rack& x, std::size_t cap) {
  if (x.size() > cap) throw BudgetExceeded("rack larger than simplicity cap");
  if (x.size() < 2 || x.is_abelian()) return false;
  for (RackElement a = 0; a < x.size(); ++a)
    for (RackElement b = a + 1; b < x.size(); ++b) {
      const auto cls = congruence_generated(x, a, b);
      if (std::any_of(cls.begin(), cls.end(), [&](std::size_t c) { return c != cls[0]; })) return false;
    }
  return true;
}

}  // namespace nichols
