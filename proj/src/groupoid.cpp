#include "nichols/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "nichols/errors.hpp"
#include "nichols/nichols.hpp"

namespace nichols {

namespace {

std::string vec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

IntVector simple_root(std::size_t theta, std::size_t i, long sign = 1) {
  IntVector a(theta, 0);
  a[i] = sign;
  return a;
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

bool sign_coherent(const IntVector& v) {
  bool pos = false, neg = false;
  for (long x : v) {
    pos |= x > 0;
    neg |= x < 0;
  }
  return pos != neg;
}

long height(const IntVector& v) {
  long h = 0;
  for (long x : v) h += x < 0 ? -x : x;
  return h;
}

void check_shape(const BasicDatum& b, const std::vector<IntMatrix>& cartan) {
  b.validate();
  if (cartan.size() != b.size()) throw InputError("one Cartan matrix per point is required");
  for (const auto& c : cartan) {
    if (c.size() != b.rank()) throw InputError("Cartan matrix size does not match the rank");
    for (const auto& row : c)
      if (row.size() != b.rank()) throw InputError("Cartan matrix is not square");
  }
}

}  // namespace

void BasicDatum::validate() const {
  if (points.empty()) throw InputError("basic datum needs at least one point");
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho[i].size() != points.size()) throw InputError("rho_" + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t x = 0; x < points.size(); ++x) {
      if (rho[i][x] >= points.size()) throw InputError("rho_" + std::to_string(i + 1) + " maps outside the points");
      if (rho[i][rho[i][x]] != x)
        throw InputError("rho_" + std::to_string(i + 1) + " is not an involution at " + points[x]);
    }
  }
}

IntVector reflect_root(const IntMatrix& c, std::size_t i, const IntVector& beta) {
  if (i >= c.size() || beta.size() != c.size()) throw InputError("reflection index or root length out of range");
  long coef = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) coef += c[i][j] * beta[j];
  IntVector out = beta;
  out[i] -= coef;
  return out;
}

IntMatrix reflection_matrix(const IntMatrix& c, std::size_t i) {
  const std::size_t n = c.size();
  IntMatrix m(n, std::vector<long>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    IntVector img = reflect_root(c, i, simple_root(n, j));
    for (std::size_t k = 0; k < n; ++k) m[k][j] = img[k];
  }
  return m;
}

IntMatrix coxeter_matrix_from_roots(const std::vector<IntVector>& roots, std::size_t rank) {
  std::set<IntVector> distinct(roots.begin(), roots.end());
  IntMatrix m(rank, std::vector<long>(rank, 1));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      if (i == j) continue;
      long count = 0;
      for (const auto& r : distinct) {
        bool inside = r[i] >= 0 && r[j] >= 0;
        for (std::size_t k = 0; k < rank && inside; ++k)
          if (k != i && k != j && r[k] != 0) inside = false;
        count += inside && (r[i] || r[j]);
      }
      m[i][j] = count;
    }
  return m;
}

Report check_grs_axioms(const GRSDatum& r) {
  Report rep;
  const BasicDatum& b = r.basic;
  try {
    check_shape(b, r.cartan);
    if (r.roots.size() != b.size()) throw InputError("one root set per point is required");
    for (const auto& d : r.roots)
      for (const auto& v : d)
        if (v.size() != b.rank()) throw InputError("root " + vec_str(v) + " has the wrong length");
  } catch (const InputError& e) {
    rep.items.push_back({"shape", false, e.what()});
    return rep;
  }
  rep.items.push_back({"shape", true, ""});
  const std::size_t n = b.rank();
  std::vector<std::set<IntVector>> delta;
  for (const auto& d : r.roots) delta.emplace_back(d.begin(), d.end());

  CheckItem gcm{"generalized cartan", true, ""};
  CheckItem compat{"cartan compatibility", true, ""};
  for (std::size_t x = 0; x < b.size() && gcm.ok; ++x)
    for (std::size_t i = 0; i < n && gcm.ok; ++i)
      for (std::size_t j = 0; j < n && gcm.ok; ++j) {
        const long c = r.cartan[x][i][j];
        if ((i == j && c != 2) || (i != j && c > 0) || (i != j && (c == 0) != (r.cartan[x][j][i] == 0))) {
          gcm.ok = false;
          gcm.detail = "point " + b.points[x] + ", entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        }
      }
  for (std::size_t x = 0; x < b.size() && compat.ok; ++x)
    for (std::size_t i = 0; i < n && compat.ok; ++i)
      for (std::size_t j = 0; j < n && compat.ok; ++j)
        if (r.cartan[x][i][j] != r.cartan[b.rho[i][x]][i][j]) {
          compat.ok = false;
          compat.detail = "c_" + std::to_string(i + 1) + std::to_string(j + 1) + " differs at " + b.points[x] +
                          " and " + b.points[b.rho[i][x]];
        }
  rep.items.push_back(gcm);
  rep.items.push_back(compat);

  CheckItem pn{"positive and negative", true, ""};
  for (std::size_t x = 0; x < b.size() && pn.ok; ++x)
    for (const auto& v : delta[x]) {
      IntVector neg = v;
      for (auto& t : neg) t = -t;
      if (!sign_coherent(v)) {
        pn.ok = false;
        pn.detail = "root " + vec_str(v) + " at " + b.points[x] + " is neither positive nor negative";
      } else if (!delta[x].count(neg)) {
        pn.ok = false;
        pn.detail = "root " + vec_str(v) + " at " + b.points[x] + " has no negative";
      }
      if (!pn.ok) break;
    }
  rep.items.push_back(pn);

  CheckItem simple{"simple multiples", true, ""};
  for (std::size_t x = 0; x < b.size() && simple.ok; ++x) {
    for (std::size_t i = 0; i < n && simple.ok; ++i)
      if (!delta[x].count(simple_root(n, i)) || !delta[x].count(simple_root(n, i, -1))) {
        simple.ok = false;
        simple.detail = "alpha_" + std::to_string(i + 1) + " or its negative missing at " + b.points[x];
      }
    for (const auto& v : delta[x]) {
      std::size_t support = 0;
      for (long t : v) support += t != 0;
      if (support == 1 && height(v) != 1) {
        simple.ok = false;
        simple.detail = "multiple " + vec_str(v) + " of a simple root at " + b.points[x];
        break;
      }
    }
  }
  rep.items.push_back(simple);

  CheckItem refl{"reflection invariance", true, ""};
  for (std::size_t x = 0; x < b.size() && refl.ok; ++x)
    for (std::size_t i = 0; i < n && refl.ok; ++i) {
      std::set<IntVector> image;
      for (const auto& v : delta[x]) image.insert(reflect_root(r.cartan[x], i, v));
      const std::size_t y = b.rho[i][x];
      if (image == delta[y]) continue;
      refl.ok = false;
      for (const auto& v : delta[x]) {
        auto w = reflect_root(r.cartan[x], i, v);
        if (!delta[y].count(w)) {
          refl.detail = "s_" + std::to_string(i + 1) + "(" + vec_str(v) + ") = " + vec_str(w) + " is not a root at " +
                        b.points[y];
          break;
        }
      }
      if (refl.detail.empty())
        refl.detail = "s_" + std::to_string(i + 1) + " image of the roots at " + b.points[x] + " misses roots at " +
                      b.points[y];
    }
  rep.items.push_back(refl);

  CheckItem cox{"coxeter points", true, ""};
  for (std::size_t x = 0; x < b.size() && cox.ok; ++x) {
    const IntMatrix m = coxeter_matrix_from_roots(r.roots[x], n);
    for (std::size_t i = 0; i < n && cox.ok; ++i)
      for (std::size_t j = 0; j < n && cox.ok; ++j) {
        if (i == j) continue;
        std::size_t p = x;
        for (long k = 0; k < m[i][j]; ++k) p = b.rho[i][b.rho[j][p]];
        if (p != x) {
          cox.ok = false;
          cox.detail = "(rho_" + std::to_string(i + 1) + " rho_" + std::to_string(j + 1) + ")^" +
                       std::to_string(m[i][j]) + " moves " + b.points[x];
        }
      }
  }
  rep.items.push_back(cox);
  return rep;
}

Morphism WeylGroupoid::generator(std::size_t i, std::size_t x) const {
  return {x, basic.rho[i][x], reflection_matrix(cartan[x], i)};
}

WeylGroupoid generate_weyl_groupoid(const BasicDatum& basic, const std::vector<IntMatrix>& cartan,
                                    std::size_t max_morphisms, std::size_t max_coxeter) {
  check_shape(basic, cartan);
  WeylGroupoid w{basic, cartan, {}, {}};
  const std::size_t n = basic.rank();
  std::vector<std::vector<IntMatrix>> s(basic.size());
  for (std::size_t x = 0; x < basic.size(); ++x)
    for (std::size_t i = 0; i < n; ++i) s[x].push_back(reflection_matrix(cartan[x], i));

  std::set<std::tuple<std::size_t, std::size_t, IntMatrix>> seen;
  std::deque<std::size_t> queue;
  for (std::size_t x = 0; x < basic.size(); ++x) {
    seen.emplace(x, x, identity(n));
    w.morphisms.push_back({x, x, identity(n)});
    queue.push_back(w.morphisms.size() - 1);
  }
  while (!queue.empty()) {
    const Morphism f = w.morphisms[queue.front()];
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Morphism g{f.source, basic.rho[i][f.target], mul(s[f.target][i], f.w)};
      if (!seen.emplace(g.source, g.target, g.w).second) continue;
      if (w.morphisms.size() >= max_morphisms) throw BudgetExceeded("Weyl groupoid exceeds the morphism cap");
      w.morphisms.push_back(std::move(g));
      queue.push_back(w.morphisms.size() - 1);
    }
  }

  for (std::size_t x = 0; x < basic.size(); ++x) {
    IntMatrix m(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = x;
        IntMatrix acc = identity(n);
        for (std::size_t k = 1; k <= max_coxeter; ++k) {
          acc = mul(s[p][i], acc);
          p = basic.rho[i][p];
          acc = mul(s[p][j], acc);
          p = basic.rho[j][p];
          if (p == x && acc == identity(n)) {
            m[i][j] = static_cast<long>(k);
            break;
          }
        }
      }
    w.coxeter.push_back(std::move(m));
  }
  return w;
}

Report coxeter_relations_check(const WeylGroupoid& w, const std::vector<IntMatrix>& m) {
  Report rep;
  CheckItem item{"coxeter relations", true, ""};
  const std::size_t n = w.basic.rank();
  if (m.size() != w.basic.size()) {
    item.ok = false;
    item.detail = "one Coxeter matrix per point is required";
  }
  for (std::size_t x = 0; x < w.basic.size() && item.ok; ++x)
    for (std::size_t i = 0; i < n && item.ok; ++i)
      for (std::size_t j = 0; j < n && item.ok; ++j) {
        std::size_t p = x;
        IntMatrix acc = identity(n);
        for (long k = 0; k < m[x][i][j]; ++k) {
          acc = mul(reflection_matrix(w.cartan[p], i), acc);
          p = w.basic.rho[i][p];
          acc = mul(reflection_matrix(w.cartan[p], j), acc);
          p = w.basic.rho[j][p];
        }
        if (p != x || acc != identity(n) || m[x][i][j] < 1) {
          item.ok = false;
          item.detail = "(s_" + std::to_string(i + 1) + " s_" + std::to_string(j + 1) + ")^" +
                        std::to_string(m[x][i][j]) + " is not the identity at " + w.basic.points[x];
        }
      }
  rep.items.push_back(item);
  return rep;
}

RootClosure real_root_closure(const BasicDatum& basic, const std::vector<IntMatrix>& cartan, std::size_t max_height,
                              std::size_t max_roots) {
  check_shape(basic, cartan);
  const std::size_t n = basic.rank();
  std::vector<std::set<IntVector>> delta(basic.size());
  std::deque<std::pair<std::size_t, IntVector>> work;
  std::size_t total = 0;
  for (std::size_t x = 0; x < basic.size(); ++x)
    for (std::size_t i = 0; i < n; ++i)
      for (long sgn : {1L, -1L}) {
        delta[x].insert(simple_root(n, i, sgn));
        work.emplace_back(x, simple_root(n, i, sgn));
        ++total;
      }
  RootClosure out;
  while (!work.empty()) {
    auto [x, beta] = work.front();
    work.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      IntVector img = reflect_root(cartan[x], i, beta);
      const std::size_t y = basic.rho[i][x];
      if (delta[y].count(img)) continue;
      if (!sign_coherent(img)) {
        out.reason = "root " + vec_str(img) + " at " + basic.points[y] + " has mixed signs";
        return out;
      }
      if (static_cast<std::size_t>(height(img)) > max_height) {
        out.reason = "root height exceeds " + std::to_string(max_height);
        return out;
      }
      if (++total > max_roots) {
        out.reason = "more than " + std::to_string(max_roots) + " roots";
        return out;
      }
      delta[y].insert(img);
      work.emplace_back(y, std::move(img));
    }
  }
  out.finite = true;
  for (const auto& d : delta) out.roots.emplace_back(d.begin(), d.end());
  return out;
}

std::vector<IntVector> positive_part(const std::vector<IntVector>& roots) {
  std::vector<IntVector> out;
  for (const auto& r : roots)
    if (std::all_of(r.begin(), r.end(), [](long t) { return t >= 0; })) out.push_back(r);
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
    return height(a) != height(b) ? height(a) < height(b) : a > b;
  });
  return out;
}

std::optional<std::vector<IntVector>> classical_positive_roots(const IntMatrix& a, std::size_t max_height) {
  BasicDatum b{{"x"}, std::vector<std::vector<std::size_t>>(a.size(), std::vector<std::size_t>{0})};
  auto c = real_root_closure(b, {a}, max_height);
  if (!c.finite) return std::nullopt;
  return positive_part(c.roots[0]);
}

CycloNumber bicharacter(const DiagonalBraiding& q, const IntVector& a, const IntVector& b) {
  const std::size_t n = q.theta();
  if (a.size() != n || b.size() != n) throw InputError("degree length does not match the rank");
  CycloNumber v(1);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      if (a[k] * b[l] != 0) v *= q.q[k][l].pow(a[k] * b[l]);
  return v;
}

std::optional<mpz_class> dimension_from_roots(const DiagonalBraiding& q, const std::vector<IntVector>& positive_roots) {
  mpz_class d = 1;
  for (const auto& beta : positive_roots) {
    const CycloNumber v = bicharacter(q, beta, beta);
    if (v.is_one()) return std::nullopt;
    auto ord = v.order_as_root_of_unity();
    if (!ord) throw InputError("braiding entry is not a root of unity");
    d *= *ord;
  }
  return d;
}

namespace {

// e with q = zeta_n^e.
long exponent_of(const CycloNumber& q, unsigned n) {
  for (unsigned e = 0; e < n; ++e)
    if (CycloNumber::root_of_unity(n, e) == q) return e;
  throw InputError("braiding entry " + q.to_string() + " is not a power of zeta_" + std::to_string(n));
}

std::vector<long> twist_key(const std::vector<std::vector<long>>& e, unsigned n) {
  std::vector<long> key;
  for (std::size_t i = 0; i < e.size(); ++i) key.push_back(e[i][i]);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) key.push_back((e[i][j] + e[j][i]) % static_cast<long>(n));
  return key;
}

long mod(long a, long n) { return ((a % n) + n) % n; }

}  // namespace

DiagonalWeylResult weyl_groupoid_of_diagonal(const DiagonalBraiding& q, const DiagonalWeylCaps& caps) {
  q.validate();
  const std::size_t n = q.theta();
  DiagonalWeylResult out;
  unsigned order = 1;
  for (const auto& row : q.q)
    for (const auto& x : row) order = std::lcm(order, *x.order_as_root_of_unity());
  out.conductor = order;
  std::vector<std::vector<long>> e0(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e0[i][j] = exponent_of(q.q[i][j], order);

  std::map<std::vector<long>, std::size_t> index;
  index[twist_key(e0, order)] = 0;
  out.exponents.push_back(e0);
  out.basic.points.push_back("p0");
  out.basic.rho.assign(n, {});
  for (std::size_t x = 0; x < out.exponents.size(); ++x) {
    const auto braiding = BraidedVectorSpace::diagonal(out.point(x));
    IntMatrix c(n, std::vector<long>(n, 2));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        auto cij = cartan_coefficient(braiding, i, j, caps.h_max);
        if (!cij) {
          out.reason = "c_" + std::to_string(i + 1) + std::to_string(j + 1) + " at " + out.basic.points[x] +
                       " does not stabilize within " + std::to_string(caps.h_max);
          return out;
        }
        c[i][j] = *cij;
      }
    out.cartan.push_back(c);
    for (std::size_t i = 0; i < n; ++i) {
      const IntMatrix s = reflection_matrix(c, i);
      std::vector<std::vector<long>> e(n, std::vector<long>(n, 0));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          long v = 0;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) v += s[a][j] * s[b][k] * out.exponents[x][a][b];
          e[j][k] = mod(v, order);
        }
      auto [it, fresh] = index.emplace(twist_key(e, order), out.exponents.size());
      if (fresh) {
        if (out.exponents.size() >= caps.max_points) {
          out.reason = "more than " + std::to_string(caps.max_points) + " points";
          return out;
        }
        out.basic.points.push_back("p" + std::to_string(out.exponents.size()));
        out.exponents.push_back(std::move(e));
      }
      out.basic.rho[i].push_back(it->second);
    }
  }
  try {
    out.basic.validate();
  } catch (const InputError& err) {
    out.reason = err.what();
    return out;
  }
  auto closure = real_root_closure(out.basic, out.cartan, caps.max_height, caps.max_roots);
  if (!closure.finite) {
    out.reason = closure.reason;
    return out;
  }
  out.roots = std::move(closure.roots);
  out.status = DiagonalWeylResult::Status::finite;
  return out;
}

mpz_class u_dimension(const YDDatumDiagonal& d, const IntMatrix& a) {
  const std::size_t n = d.g.size();
  if (d.chi.size() != n || a.size() != n) throw InputError("datum and Cartan matrix sizes differ");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InputError("Cartan matrix is not square");
    for (std::size_t j = 0; j < n; ++j)
      if ((i == j && a[i][j] != 2) || (i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0))))
        throw InputError("not a Cartan matrix");
  }
  auto roots = classical_positive_roots(a);
  if (!roots) throw InputError("Cartan matrix is not of finite type");
  const CycloMatrix q = d.braiding_matrix();
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i][i].is_one()) throw InputError("q_ii = 1: not a Cartan datum");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && q[i][j] * q[j][i] != q[i][i].pow(a[i][j]))
        throw InputError("q_ij q_ji != q_ii^a_ij at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         "): not a Cartan datum");
  }
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j] != 0) comp[find(i)] = find(j);
  mpz_class dim = static_cast<unsigned long>(d.group.order());
  for (const auto& beta : *roots) {
    std::size_t first = n;
    for (std::size_t k = 0; k < n; ++k)
      if (beta[k] != 0 && first == n) first = k;
    std::size_t rep = first;
    for (std::size_t k = 0; k < n; ++k)
      if (find(k) == find(first)) {
        rep = k;
        break;
      }
    dim *= *q[rep][rep].order_as_root_of_unity();
  }
  return dim;
}

}  // namespace nichols
