#include "nichols/superreflect.hpp"

#include <deque>
#include <map>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

bool is_odd_prime(unsigned long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

mpq_class sign(long e) { return e % 2 ? mpq_class(-1) : mpq_class(1); }

}  // namespace

mpq_class SuperField::normalize(const mpq_class& x) const {
  if (rational()) return x;
  const mpz_class m = p;
  mpz_class den = x.get_den() % m, num = x.get_num() % m;
  if (num < 0) num += m;
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) throw DivisionByZero();
  return mpq_class(mpz_class((num * inv) % m));
}

mpq_class SuperField::inverse(const mpq_class& x) const {
  if (normalize(x) == 0) throw DivisionByZero();
  return normalize(1 / x);
}

SuperField SuperField::parse(const std::string& s) {
  if (s == "Q") return {};
  if (s.rfind("Fp:", 0) == 0) {
    unsigned long p = 0;
    try {
      p = std::stoul(s.substr(3));
    } catch (const std::exception&) {
      throw InputError("bad field \"" + s + "\"");
    }
    if (!is_odd_prime(p)) throw InputError("field characteristic must be an odd prime, got " + s.substr(3));
    return {p};
  }
  throw InputError("field must be \"Q\" or \"Fp:<p>\", got \"" + s + "\"");
}

std::string SuperField::to_string() const { return rational() ? "Q" : "Fp:" + std::to_string(p); }

void SuperDatum::validate() {
  if (!field.rational() && !is_odd_prime(field.p)) throw InputError("field characteristic must be an odd prime");
  const std::size_t n = a.size();
  if (n == 0) throw InputError("A must be nonempty");
  if (p.size() != n) throw InputError("parity vector has length " + std::to_string(p.size()) + ", expected " +
                                      std::to_string(n));
  if (c.size() != n) throw InputError("C has the wrong size");
  for (std::size_t j = 0; j < n; ++j) {
    if (a[j].size() != n || c[j].size() != n) throw InputError("A and C must be square");
    if (p[j] != 0 && p[j] != 1) throw InputError("parities must be 0 or 1");
    for (auto& x : a[j]) x = field.normalize(x);
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k && c[j][k] != 2) throw InputError("c_ii must be 2");
      if (j != k && c[j][k] > 0) throw InputError("off-diagonal entries of C must be nonpositive");
      if (j != k && (a[j][k] == 0) != (a[k][j] == 0))
        throw InputError("a_" + std::to_string(j + 1) + std::to_string(k + 1) + " = 0 but a_" + std::to_string(k + 1) +
                         std::to_string(j + 1) + " != 0");
    }
}

std::string SuperDatum::to_string() const {
  std::string s = "A=[";
  for (std::size_t j = 0; j < a.size(); ++j) {
    s += j ? ",[" : "[";
    for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + a[j][k].get_str();
    s += "]";
  }
  s += "] p=(";
  for (std::size_t j = 0; j < p.size(); ++j) s += (j ? "," : "") + std::to_string(p[j]);
  return s + ")";
}

std::vector<mpq_class> d_sequence(const SuperDatum& d, std::size_t i, std::size_t j, std::size_t m_max) {
  if (i == j || i >= d.theta() || j >= d.theta()) throw InputError("d_m needs two distinct indices in range");
  const mpq_class& aii = d.a[i][i];
  const mpq_class& aij = d.a[i][j];
  std::vector<mpq_class> out;
  for (std::size_t m = 1; m <= m_max; ++m) {
    mpq_class v;
    if (d.p[i] == 0) {
      v = mpq_class(m) * aij + mpq_class(m * (m - 1) / 2) * aii;
    } else {
      const std::size_t k = m / 2;
      v = mpq_class(k) * aii + (m % 2 ? aij : mpq_class(0));
    }
    out.push_back(d.field.normalize(v));
  }
  return out;
}

std::pair<mpq_class, mpq_class> nu_mu(const SuperDatum& d, std::size_t i, std::size_t j, std::size_t n) {
  if (n == 0) return {mpq_class(1), mpq_class(0)};
  const auto ds = d_sequence(d, i, j, n);
  const long pi = d.p[i], pj = d.p[j];
  auto factor = [&](std::size_t t) -> mpq_class { return sign(pi * ((static_cast<long>(t) - 1) * pi + pj)) * ds[t - 1]; };
  mpq_class tail = 1;
  for (std::size_t t = 2; t <= n; ++t) tail *= factor(t);
  const mpq_class nu = d.field.normalize(factor(1) * tail);
  const mpq_class mu = d.field.normalize(sign(pi * pj) * mpq_class(n) * tail * d.a[j][i]);
  return {nu, mu};
}

std::optional<long> heuristic_cartan_entry(const SuperDatum& d, std::size_t i, std::size_t j, std::size_t m_max) {
  const auto ds = d_sequence(d, i, j, m_max + 1);
  for (std::size_t m = 0; m <= m_max; ++m)
    if (ds[m] == 0) return -static_cast<long>(m);
  return std::nullopt;
}

IntMatrix heuristic_cartan(const SuperDatum& d, std::size_t m_max) {
  const std::size_t n = d.theta();
  IntMatrix c(n, std::vector<long>(n, 2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      auto v = heuristic_cartan_entry(d, i, j, m_max);
      if (!v)
        throw InputError("no d_m vanishes for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") up to m = " + std::to_string(m_max + 1));
      c[i][j] = *v;
    }
  return c;
}

SuperDatum reflect_super(const SuperDatum& d, std::size_t i, CartanUpdate update) {
  const std::size_t n = d.theta();
  if (i >= n) throw InputError("reflection index out of range");
  SuperDatum r = d;
  const auto& a = d.a;
  const auto& c = d.c[i];
  std::vector<mpq_class> nu(n), mu(n);
  for (std::size_t j = 0; j < n; ++j)
    if (j != i) std::tie(nu[j], mu[j]) = nu_mu(d, i, j, static_cast<std::size_t>(-c[j]));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      mpq_class v;
      if (j == i && k == i) {
        v = a[i][i];
      } else if (j == i) {
        v = mpq_class(c[k]) * a[i][i] - a[i][k];
      } else if (k == i) {
        v = -mu[j] * a[i][i] - nu[j] * a[j][i];
      } else {
        v = -mpq_class(c[k]) * mu[j] * a[i][i] + mu[j] * a[i][k] - mpq_class(c[k]) * nu[j] * a[j][i] +
            nu[j] * a[j][k];
      }
      r.a[j][k] = d.field.normalize(v);
    }
  for (std::size_t j = 0; j < n; ++j) r.p[j] = static_cast<int>(((d.p[j] - c[j] * d.p[i]) % 2 + 2) % 2);
  if (update == CartanUpdate::heuristic) {
    IntMatrix h = heuristic_cartan(r);
    h[i] = d.c[i];
    r.c = h;
  }
  return r;
}

SuperDatum row_canonical(const SuperDatum& d) {
  SuperDatum r = d;
  for (auto& row : r.a) {
    std::size_t k = 0;
    while (k < row.size() && row[k] == 0) ++k;
    if (k == row.size()) continue;
    const mpq_class s = d.field.inverse(row[k]);
    for (auto& x : row) x = d.field.normalize(x * s);
  }
  return r;
}

bool row_equivalent(const SuperDatum& x, const SuperDatum& y) { return row_canonical(x) == row_canonical(y); }

SuperOrbit super_orbit(const SuperDatum& d, std::size_t max_points, CartanUpdate update) {
  SuperDatum start = d;
  start.validate();
  const std::size_t n = start.theta();
  SuperOrbit out;
  std::map<std::string, std::size_t> index;
  auto key = [](const SuperDatum& x) {
    const SuperDatum r = row_canonical(x);
    std::string s = r.to_string() + " C=";
    for (const auto& row : r.c)
      for (long v : row) s += std::to_string(v) + ",";
    return s;
  };
  index[key(start)] = 0;
  out.points.push_back(start);
  out.basic.rho.assign(n, {});
  for (std::size_t x = 0; x < out.points.size(); ++x) {
    for (std::size_t i = 0; i < n; ++i) {
      SuperDatum y = reflect_super(out.points[x], i, update);
      if (!(reflect_super(y, i, update) == out.points[x])) out.raw_involutive = false;
      auto [it, fresh] = index.emplace(key(y), out.points.size());
      if (fresh) {
        if (out.points.size() >= max_points)
          throw BudgetExceeded("super orbit exceeds " + std::to_string(max_points) + " points");
        out.points.push_back(std::move(y));
      }
      out.basic.rho[i].push_back(it->second);
    }
  }
  for (const auto& x : out.points) {
    out.basic.points.push_back(x.to_string());
    out.cartan.push_back(x.c);
  }
  return out;
}

}  // namespace nichols
