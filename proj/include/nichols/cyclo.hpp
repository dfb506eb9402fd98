#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace nichols {

namespace detail {
struct CycloContext;
}

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// Stored in the power basis 1, z, ..., z^(phi(N)-1) modulo the N-th
/// cyclotomic polynomial.  Conductors 2 and 2m (m odd) are folded into 1 and
/// m, so Q(zeta_2) = Q always has conductor 1.  Arithmetic on operands of
/// different conductors embeds both into Q(zeta_lcm).  Results keep the
/// ambient conductor; normalized() moves an element to the smallest
/// conductor detectable by a divisor check.
class CycloNumber {
public:
  CycloNumber();
  CycloNumber(long v);  // NOLINT(google-explicit-constructor)
  explicit CycloNumber(const mpq_class& v);
  CycloNumber(unsigned conductor, std::vector<mpq_class> coeffs);

  static CycloNumber root_of_unity(unsigned n, long k);
  static CycloNumber zero() { return CycloNumber(); }
  static CycloNumber one() { return CycloNumber(1L); }

  unsigned conductor() const;
  unsigned degree() const { return static_cast<unsigned>(coeffs_.size()); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return coeffs_.size() == 1; }

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator/=(const CycloNumber& o);

  /// this -= a * b, without temporaries when all conductors agree.
  void sub_mul(const CycloNumber& a, const CycloNumber& b);
  /// this += a * b.
  void add_mul(const CycloNumber& a, const CycloNumber& b);

  /// Throws DivisionByZero for zero.
  CycloNumber inv() const;
  CycloNumber pow(long e) const;

  /// Smallest n >= 1 with x^n = 1, if x is a root of unity.
  std::optional<unsigned> order_as_root_of_unity() const;

  /// Same value at the smallest conductor found by the divisor check.
  CycloNumber normalized() const;
  /// Same value embedded into Q(zeta_m); m must be a multiple of conductor().
  CycloNumber embedded(unsigned m) const;

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

  std::string to_string() const;

private:
  const detail::CycloContext* ctx_;
  std::vector<mpq_class> coeffs_;

  CycloNumber(const detail::CycloContext* ctx, std::vector<mpq_class> coeffs)
      : ctx_(ctx), coeffs_(std::move(coeffs)) {}
  void unify_with(const CycloNumber& o);
  void mul_same_field(const CycloNumber& o, std::vector<mpq_class>& out) const;
};

inline CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
inline CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
inline CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
inline CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }

std::ostream& operator<<(std::ostream& os, const CycloNumber& x);

/// Canonical smallest conductor for Q(zeta_n): n with n = 2 mod 4 folded to n/2.
unsigned canonical_conductor(unsigned n);
/// Euler phi.
unsigned euler_phi(unsigned n);
/// Coefficients (low to high) of the n-th cyclotomic polynomial.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

}  // namespace nichols
