#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichols/groupoid.hpp"

namespace nichols {

/// Q (p = 0) or F_p for an odd prime p; F_p elements are stored as integers in [0, p).
struct SuperField {
  unsigned long p = 0;

  bool rational() const { return p == 0; }
  mpq_class normalize(const mpq_class& x) const;
  mpq_class inverse(const mpq_class& x) const;
  /// "Q" or "Fp:<p>".
  static SuperField parse(const std::string& s);
  std::string to_string() const;
};

using FieldMatrix = std::vector<std::vector<mpq_class>>;

/// (A, p) with a supplied generalized Cartan matrix C.
struct SuperDatum {
  SuperField field;
  FieldMatrix a;
  std::vector<int> p;
  IntMatrix c;

  std::size_t theta() const { return a.size(); }
  /// Shapes, parities in {0, 1}, C a generalized Cartan matrix, a_jk = 0 => a_kj = 0.
  /// Also reduces A into the field.
  void validate();
  std::string to_string() const;
  bool operator==(const SuperDatum& o) const { return a == o.a && p == o.p && c == o.c; }
};

/// d_1, ..., d_mmax for the pair (i, j), i != j.
std::vector<mpq_class> d_sequence(const SuperDatum& d, std::size_t i, std::size_t j, std::size_t m_max);

/// (nu_{j,n}, mu_{j,n}) relative to i.
std::pair<mpq_class, mpq_class> nu_mu(const SuperDatum& d, std::size_t i, std::size_t j, std::size_t n);

/// Heuristic c_ij = -min{m : d_{m+1} = 0}; nullopt if no d_m with m <= m_max + 1 vanishes.
std::optional<long> heuristic_cartan_entry(const SuperDatum& d, std::size_t i, std::size_t j, std::size_t m_max = 64);
/// Whole heuristic matrix; InputError when some entry is undetermined.
IntMatrix heuristic_cartan(const SuperDatum& d, std::size_t m_max = 64);

enum class CartanUpdate {
  carry,      // C^{r_i(A,p)} = C^{A,p}
  heuristic,  // row i carried, the other rows from heuristic_cartan_entry
};

/// r_i(A, p) with parities reduced mod 2.
SuperDatum reflect_super(const SuperDatum& d, std::size_t i, CartanUpdate update = CartanUpdate::carry);

/// Rows of A scaled so that the first nonzero entry is 1.
SuperDatum row_canonical(const SuperDatum& d);
bool row_equivalent(const SuperDatum& x, const SuperDatum& y);

struct SuperOrbit {
  /// One representative per row-rescaling class, in discovery order.
  std::vector<SuperDatum> points;
  BasicDatum basic;
  std::vector<IntMatrix> cartan;
  /// r_i r_i (x) == x exactly, without rescaling, for every point and i.
  bool raw_involutive = true;

  bool operator==(const SuperOrbit&) const = default;
};

/// Breadth-first closure under all r_i up to row rescaling; BudgetExceeded past max_points.
SuperOrbit super_orbit(const SuperDatum& d, std::size_t max_points = 1000, CartanUpdate update = CartanUpdate::carry);

}  // namespace nichols
