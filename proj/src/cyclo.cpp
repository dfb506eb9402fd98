#include "nichols/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

namespace detail {

struct CycloContext {
  unsigned n = 1;
  unsigned phi = 1;
  std::vector<long> poly;                 // Phi_n, low to high, monic
  std::vector<std::vector<long>> powers;  // powers[e] = z^e mod Phi_n, e < n
};

namespace {

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den monic
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

std::vector<long> compute_cyclotomic(unsigned n, std::map<unsigned, std::vector<long>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, compute_cyclotomic(d, memo));
  memo[n] = p;
  return p;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<unsigned, std::unique_ptr<CycloContext>>& registry() {
  static std::map<unsigned, std::unique_ptr<CycloContext>> r;
  return r;
}

std::map<unsigned, std::vector<long>>& poly_memo() {
  static std::map<unsigned, std::vector<long>> m;
  return m;
}

}  // namespace

const CycloContext* context(unsigned n) {
  n = canonical_conductor(n);
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  if (auto it = reg.find(n); it != reg.end()) return it->second.get();
  auto ctx = std::make_unique<CycloContext>();
  ctx->n = n;
  ctx->poly = compute_cyclotomic(n, poly_memo());
  ctx->phi = static_cast<unsigned>(ctx->poly.size() - 1);
  const unsigned phi = ctx->phi;
  ctx->powers.assign(n, std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (unsigned e = 0; e < n; ++e) {
    ctx->powers[e] = cur;
    // multiply by z and reduce with the monic Phi_n
    const long top = cur[phi - 1];
    for (unsigned j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned j = 0; j < phi; ++j) cur[j] -= top * ctx->poly[j];
  }
  const CycloContext* raw = ctx.get();
  reg.emplace(n, std::move(ctx));
  return raw;
}

}  // namespace detail

using detail::CycloContext;

unsigned canonical_conductor(unsigned n) {
  if (n == 0) throw InputError("conductor must be positive");
  if (n % 4 == 2) return n / 2;
  return n;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw InputError("cyclotomic polynomial index must be positive");
  std::lock_guard<std::mutex> lock(detail::registry_mutex());
  auto& memo = detail::poly_memo();
  detail::compute_cyclotomic(n, memo);
  return memo.at(n);
}

CycloNumber::CycloNumber() : ctx_(detail::context(1)), coeffs_(1) {}

CycloNumber::CycloNumber(long v) : ctx_(detail::context(1)), coeffs_{mpq_class(v)} {}

CycloNumber::CycloNumber(const mpq_class& v) : ctx_(detail::context(1)), coeffs_{v} {
  coeffs_[0].canonicalize();
}

CycloNumber::CycloNumber(unsigned conductor, std::vector<mpq_class> coeffs) {
  if (conductor == 0) throw InputError("conductor must be positive");
  // Input is interpreted in the power basis of Q(zeta_conductor); fold
  // non-canonical conductors by re-expanding through the power map.
  const unsigned phi_in = euler_phi(conductor);
  if (coeffs.size() != phi_in)
    throw InputError("coefficient vector length must equal phi(conductor)");
  for (auto& c : coeffs) c.canonicalize();
  const unsigned canon = canonical_conductor(conductor);
  if (canon == conductor) {
    ctx_ = detail::context(conductor);
    coeffs_ = std::move(coeffs);
  } else {
    CycloNumber acc;
    for (unsigned t = 0; t < phi_in; ++t) {
      if (coeffs[t] == 0) continue;
      acc.add_mul(CycloNumber(coeffs[t]), root_of_unity(conductor, t));
    }
    *this = acc;
  }
  *this = normalized();
}

CycloNumber CycloNumber::root_of_unity(unsigned n, long k) {
  if (n == 0) throw InputError("root_of_unity: N must be >= 1");
  long kk = k % static_cast<long>(n);
  if (kk < 0) kk += n;
  if (n % 4 == 2) {
    // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
    const unsigned m = n / 2;
    CycloNumber z = root_of_unity(m, static_cast<long>((kk * ((m + 1) / 2)) % m));
    return (kk % 2 == 1) ? -z : z;
  }
  const CycloContext* ctx = detail::context(n);
  const auto& p = ctx->powers[static_cast<std::size_t>(kk)];
  std::vector<mpq_class> c(ctx->phi);
  for (unsigned j = 0; j < ctx->phi; ++j) c[j] = p[j];
  return CycloNumber(ctx, std::move(c));
}

unsigned CycloNumber::conductor() const { return ctx_->n; }

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycloNumber::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

CycloNumber CycloNumber::embedded(unsigned m) const {
  m = canonical_conductor(m);
  if (m == ctx_->n) return *this;
  if (m % ctx_->n != 0) throw InputError("embedding target must be a multiple of the conductor");
  const CycloContext* target = detail::context(m);
  const unsigned step = m / ctx_->n;
  std::vector<mpq_class> out(target->phi);
  for (unsigned t = 0; t < coeffs_.size(); ++t) {
    if (sgn(coeffs_[t]) == 0) continue;
    const auto& p = target->powers[(t * step) % m];
    for (unsigned j = 0; j < target->phi; ++j)
      if (p[j] != 0) out[j] += coeffs_[t] * p[j];
  }
  return CycloNumber(target, std::move(out));
}

void CycloNumber::unify_with(const CycloNumber& o) {
  if (ctx_ == o.ctx_) return;
  const unsigned l = std::lcm(ctx_->n, o.ctx_->n);
  if (l != ctx_->n) *this = embedded(l);
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  if (ctx_ != o.ctx_) {
    unify_with(o);
    if (ctx_ != o.ctx_) return *this += o.embedded(ctx_->n);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  if (ctx_ != o.ctx_) {
    unify_with(o);
    if (ctx_ != o.ctx_) return *this -= o.embedded(ctx_->n);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

void CycloNumber::mul_same_field(const CycloNumber& o, std::vector<mpq_class>& out) const {
  const unsigned phi = ctx_->phi;
  out.assign(phi, mpq_class(0));
  if (phi == 1) {
    out[0] = coeffs_[0] * o.coeffs_[0];
    return;
  }
  thread_local std::vector<mpq_class> prod;
  prod.assign(2 * phi - 1, mpq_class(0));
  thread_local mpq_class tmp;
  for (unsigned i = 0; i < phi; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (unsigned j = 0; j < phi; ++j) {
      if (sgn(o.coeffs_[j]) == 0) continue;
      mpq_mul(tmp.get_mpq_t(), coeffs_[i].get_mpq_t(), o.coeffs_[j].get_mpq_t());
      prod[i + j] += tmp;
    }
  }
  for (unsigned j = 0; j < phi; ++j) out[j] = prod[j];
  for (unsigned e = phi; e < 2 * phi - 1; ++e) {
    if (sgn(prod[e]) == 0) continue;
    const auto& p = ctx_->powers[e % ctx_->n];
    for (unsigned j = 0; j < phi; ++j)
      if (p[j] != 0) out[j] += prod[e] * p[j];
  }
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  if (ctx_ != o.ctx_) {
    unify_with(o);
    if (ctx_ != o.ctx_) return *this *= o.embedded(ctx_->n);
  }
  if (ctx_->phi == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  std::vector<mpq_class> out;
  mul_same_field(o, out);
  coeffs_ = std::move(out);
  return *this;
}

void CycloNumber::sub_mul(const CycloNumber& a, const CycloNumber& b) {
  if (ctx_ == a.ctx_ && ctx_ == b.ctx_) {
    if (ctx_->phi == 1) {
      thread_local mpq_class tmp;
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[0].get_mpq_t(), b.coeffs_[0].get_mpq_t());
      coeffs_[0] -= tmp;
      return;
    }
    thread_local std::vector<mpq_class> out;
    a.mul_same_field(b, out);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= out[i];
    return;
  }
  *this -= a * b;
}

void CycloNumber::add_mul(const CycloNumber& a, const CycloNumber& b) {
  if (ctx_ == a.ctx_ && ctx_ == b.ctx_) {
    if (ctx_->phi == 1) {
      thread_local mpq_class tmp;
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[0].get_mpq_t(), b.coeffs_[0].get_mpq_t());
      coeffs_[0] += tmp;
      return;
    }
    thread_local std::vector<mpq_class> out;
    a.mul_same_field(b, out);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += out[i];
    return;
  }
  *this += a * b;
}

namespace {

// Solves M y = rhs over Q for square invertible M (row-major), in place.
std::vector<mpq_class> solve_rational(std::vector<std::vector<mpq_class>> m,
                                      std::vector<mpq_class> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(m[piv][col]) == 0) ++piv;
    if (piv == n) throw DivisionByZero();
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const mpq_class inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      const mpq_class f = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

CycloNumber CycloNumber::inv() const {
  if (is_zero()) throw DivisionByZero();
  const unsigned phi = ctx_->phi;
  if (phi == 1) return CycloNumber(ctx_, {1 / coeffs_[0]});
  // Column t of the multiplication matrix is this * z^t.
  std::vector<std::vector<mpq_class>> m(phi, std::vector<mpq_class>(phi));
  for (unsigned t = 0; t < phi; ++t) {
    CycloNumber col = *this * root_of_unity(ctx_->n, t);
    for (unsigned r = 0; r < phi; ++r) m[r][t] = col.coeffs_[r];
  }
  std::vector<mpq_class> rhs(phi);
  rhs[0] = 1;
  return CycloNumber(ctx_, solve_rational(std::move(m), std::move(rhs)));
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& o) { return *this *= o.inv(); }

CycloNumber CycloNumber::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycloNumber result = one();
  CycloNumber base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::optional<unsigned> CycloNumber::order_as_root_of_unity() const {
  if (is_zero()) return std::nullopt;
  const unsigned bound = std::lcm(2u, ctx_->n);
  for (unsigned d = 1; d <= bound; ++d) {
    if (bound % d != 0) continue;
    if (pow(d).is_one()) return d;
  }
  return std::nullopt;
}

CycloNumber CycloNumber::normalized() const {
  if (ctx_->n == 1) return *this;
  if (is_zero()) return CycloNumber();
  // Try subfields Q(zeta_d), d | n, smallest first: solve for a preimage
  // under the embedding and accept it if it maps back exactly.
  for (unsigned d = 1; d < ctx_->n; ++d) {
    if (ctx_->n % d != 0 || canonical_conductor(d) != d) continue;
    const CycloContext* sub = detail::context(d);
    const unsigned phi_d = sub->phi;
    std::vector<CycloNumber> basis;
    basis.reserve(phi_d);
    for (unsigned t = 0; t < phi_d; ++t) basis.push_back(root_of_unity(d, t).embedded(ctx_->n));
    // Row-reduce [embedded basis | coeffs] to decide membership in the span.
    const unsigned phi = ctx_->phi;
    std::vector<std::vector<mpq_class>> aug(phi, std::vector<mpq_class>(phi_d + 1));
    for (unsigned r = 0; r < phi; ++r) {
      for (unsigned t = 0; t < phi_d; ++t) aug[r][t] = basis[t].coeffs_[r];
      aug[r][phi_d] = coeffs_[r];
    }
    std::size_t rank = 0;
    std::vector<std::size_t> pivcol;
    for (unsigned c = 0; c < phi_d && rank < phi; ++c) {
      std::size_t p = rank;
      while (p < phi && sgn(aug[p][c]) == 0) ++p;
      if (p == phi) continue;
      std::swap(aug[p], aug[rank]);
      const mpq_class inv = 1 / aug[rank][c];
      for (auto& v : aug[rank]) v *= inv;
      for (std::size_t r = 0; r < phi; ++r) {
        if (r == rank || sgn(aug[r][c]) == 0) continue;
        const mpq_class f = aug[r][c];
        for (unsigned j = 0; j <= phi_d; ++j) aug[r][j] -= f * aug[rank][j];
      }
      pivcol.push_back(c);
      ++rank;
    }
    bool consistent = true;
    for (std::size_t r = rank; r < phi; ++r)
      if (sgn(aug[r][phi_d]) != 0) consistent = false;
    if (!consistent) continue;
    std::vector<mpq_class> sol(phi_d);
    for (std::size_t r = 0; r < rank; ++r) sol[pivcol[r]] = aug[r][phi_d];
    return CycloNumber(sub, std::move(sol));
  }
  return *this;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.ctx_ == b.ctx_) return a.coeffs_ == b.coeffs_;
  const unsigned l = std::lcm(a.ctx_->n, b.ctx_->n);
  return a.embedded(l).coeffs_ == b.embedded(l).coeffs_;
}

std::string CycloNumber::to_string() const {
  const CycloNumber x = normalized();
  if (x.is_rational()) return x.coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  const std::string z = "z" + std::to_string(x.ctx_->n);
  for (unsigned t = 0; t < x.coeffs_.size(); ++t) {
    mpq_class c = x.coeffs_[t];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    c = abs(c);
    first = false;
    if (t == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << z;
    if (t > 1) os << "^" << t;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& x) { return os << x.to_string(); }

}  // namespace nichols
