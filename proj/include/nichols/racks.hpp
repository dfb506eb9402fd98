#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nichols/errors.hpp"
#include "nichols/perm.hpp"

namespace nichols {

using RackElement = std::uint32_t;
using RackTable = std::vector<std::vector<RackElement>>;
using ElementSet = std::vector<RackElement>;  // sorted, no duplicates

/// First violated rack axiom, if any.
struct RackCheck {
  bool ok = true;
  std::string message;
  std::vector<RackElement> instance;  // (x, y) for bijectivity, (x, y, z) for distributivity
};

/// Exhaustively checks bijectivity of every x|>- and self-distributivity.
RackCheck is_rack(const RackTable& table);

/// Finite rack with operation table op[x][y] = x |> y.
class Rack {
public:
  Rack() = default;
  /// Throws InputError if the table is not a rack.
  explicit Rack(RackTable table, std::vector<std::string> labels = {}, std::string provenance = "table");

  std::size_t size() const { return table_.size(); }
  RackElement op(RackElement x, RackElement y) const { return table_[x][y]; }
  /// The y with x |> y = z.
  RackElement op_inverse(RackElement x, RackElement z) const { return inverse_[x][z]; }
  const RackTable& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(RackElement x) const { return labels_[x]; }
  std::optional<RackElement> find(const std::string& label) const;
  const std::string& provenance() const { return provenance_; }
  bool is_abelian() const;

  /// Group elements behind a conjugacy-class rack (empty otherwise).
  const std::vector<Permutation>& permutations() const { return perms_; }

  friend Rack conjugacy_class_rack(const PermGroup& group, const Permutation& x, std::size_t cap);

private:
  RackTable table_;
  RackTable inverse_;
  std::vector<std::string> labels_;
  std::string provenance_;
  std::vector<Permutation> perms_;
};

/// Conjugacy class of x in G with x |> y = x y x^-1.  Throws InputError if
/// x is not in G and BudgetExceeded if the class or group exceeds the cap.
Rack conjugacy_class_rack(const PermGroup& group, const Permutation& x, std::size_t cap = 100'000);

/// Affine rack (A, g) on A = Z_{m_1} x ... x Z_{m_r}: a |> b = g(b) + (id - g)(a).
/// matrix[s][t] is the coefficient of coordinate t in coordinate s of g.
/// Elements are enumerated with the first coordinate varying fastest.
Rack affine_rack(const std::vector<unsigned>& moduli, const std::vector<std::vector<long>>& matrix);

/// X_{q,N}: F_q with multiplication by N.  q prime (N an integer) or q = 4
/// with N = "w" (a generator of F_4^x).  Labels are field elements.
Rack field_affine_rack(unsigned q, const std::string& multiplier);

/// (F_p^t, companion(f)) for monic irreducible f != X, X - 1.  Coefficients
/// are listed from the constant term up and include the leading 1.
Rack simple_affine_rack(unsigned p, const std::vector<long>& monic_coeffs);

/// Rack on n points with x |> y = y.
Rack abelian_rack(std::size_t n);
/// Disjoint union with X |> Y trivial across the parts.
Rack disjoint_union(const Rack& a, const Rack& b);

/// Smallest |>-closed subset containing s.
ElementSet subrack_generated(const Rack& x, const ElementSet& s);

/// Orbits of the inner group of the subrack y acting on y.  Orbits are sorted
/// by their smallest element.
std::vector<ElementSet> inner_orbits(const Rack& x, const ElementSet& y);

struct Decomposition {
  ElementSet r;
  ElementSet s;

  bool operator==(const Decomposition&) const = default;
};

/// A splitting into two proper subracks with R |> S = S and S |> R = R.
std::optional<Decomposition> decompose(const Rack& x, std::size_t cap = 100'000);

enum class SearchStatus { found, none, budget_exceeded };

std::string to_string(SearchStatus s);

struct TypeDWitness {
  RackElement r = 0;
  RackElement s = 0;
  ElementSet subrack;  // Y = R u S
  Decomposition parts;

  bool operator==(const TypeDWitness&) const = default;
};

struct TypeFWitness {
  std::vector<RackElement> elements;  // r_1..r_4
  std::vector<ElementSet> subracks;   // R_1..R_4

  bool operator==(const TypeFWitness&) const = default;
};

struct TypeDResult {
  SearchStatus status = SearchStatus::none;
  std::optional<TypeDWitness> witness;
  std::uint64_t candidates_examined = 0;

  bool operator==(const TypeDResult&) const = default;
};

struct TypeFResult {
  SearchStatus status = SearchStatus::none;
  std::optional<TypeFWitness> witness;
  std::uint64_t candidates_examined = 0;

  bool operator==(const TypeFResult&) const = default;
};

/// Restricted type D search: Y ranges over subracks generated by the pair.
/// "none" means no witness of that shape exists.
TypeDResult is_type_D(const Rack& x, const Budget& budget = {});
/// Restricted type F search: R_a are the inner orbits of r_a inside the
/// subrack generated by the quadruple.
TypeFResult is_type_F(const Rack& x, const Budget& budget = {});

/// Independent re-verification of witnesses against the definitions.
bool verify_type_D(const Rack& x, const TypeDWitness& w);
bool verify_type_F(const Rack& x, const TypeFWitness& w);

/// Exhaustive backtracking; BudgetExceeded above the cap.
bool rack_isomorphic(const Rack& a, const Rack& b, std::size_t cap = 16);

/// Decided by enumerating rack congruences; BudgetExceeded above the cap.
bool is_simple(const Rack& x, std::size_t cap = 24);

/// Class index of every element in the smallest congruence identifying a and b.
std::vector<std::size_t> congruence_generated(const Rack& x, RackElement a, RackElement b);

}  // namespace nichols
