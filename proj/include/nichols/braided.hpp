#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nichols/cyclo.hpp"
#include "nichols/linalg.hpp"
#include "nichols/perm.hpp"
#include "nichols/racks.hpp"

namespace nichols {

/// c(x_i (x) x_j) = q_ij x_j (x) x_i.
struct DiagonalBraiding {
  CycloMatrix q;

  std::size_t theta() const { return q.size(); }
  /// q_ij = zeta_N^{e_ij}.
  static DiagonalBraiding from_exponents(unsigned conductor, const std::vector<std::vector<long>>& e);
  /// Square, every entry a root of unity; throws InputError otherwise.
  void validate() const;
};

/// Cocycle on a rack with a decomposition X = X_1 u ... u X_r into subracks;
/// values[i][j] is the n_k x n_k matrix q_k(i, j) for j in X_k.
struct RackCocycle {
  std::vector<ElementSet> components;
  std::vector<unsigned> degrees;
  std::vector<std::vector<CycloMatrix>> values;

  static RackCocycle constant(const Rack& x, const CycloNumber& v);
  /// Principal scalar cocycle from a |X| x |X| table.
  static RackCocycle scalar(const Rack& x, const std::vector<std::vector<CycloNumber>>& table);
  /// Principal cocycle on transpositions: +1 if the conjugating permutation
  /// preserves the order of the two moved points, -1 otherwise.
  static RackCocycle transposition_sign(const Rack& transpositions);

  std::size_t component_of(RackElement j) const;
  bool is_scalar() const;
  /// values[i][j](0, 0) for scalar cocycles.
  const CycloNumber& scalar_value(RackElement i, RackElement j) const { return values[i][j][0][0]; }
};

struct CocycleCheck {
  bool ok = true;
  std::string message;
  std::vector<RackElement> instance;  // (i, j, h)
};

/// Decomposition condition X_l |> X_k = X_k, invertibility and the identity
/// q_k(i, j |> h) q_k(j, h) = q_k(i |> j, i |> h) q_k(i, h).
CocycleCheck check_cocycle(const Rack& x, const RackCocycle& q);

struct BraidTerm {
  std::uint32_t left;
  std::uint32_t right;
  CycloNumber coef;
};

/// Braided vector space of diagonal or rack type with its braiding table.
class BraidedVectorSpace {
public:
  enum class Kind { diagonal, rack };

  BraidedVectorSpace() = default;
  static BraidedVectorSpace diagonal(DiagonalBraiding d, std::vector<std::string> labels = {});
  /// Validates sizes and the decomposition; the cocycle identity is left to check_cocycle.
  static BraidedVectorSpace rack_type(Rack x, RackCocycle q);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const DiagonalBraiding& diagonal_data() const { return diag_; }
  const Rack& rack() const { return rack_; }
  const RackCocycle& cocycle() const { return cocycle_; }
  /// Rack element carrying basis vector a (rack type).
  RackElement element_of(std::uint32_t a) const { return element_of_[a]; }

  /// c(e_a (x) e_b); throws InputError for indices out of range.
  const std::vector<BraidTerm>& braiding(std::uint32_t a, std::uint32_t b) const;
  /// Unchecked access for inner loops.
  const std::vector<BraidTerm>& terms(std::uint32_t a, std::uint32_t b) const { return table_[a * dim_ + b]; }
  /// c^-1(e_a (x) e_b), unchecked.
  const std::vector<BraidTerm>& inverse_terms(std::uint32_t a, std::uint32_t b) const {
    return inverse_table_[a * dim_ + b];
  }
  /// Matrix of c on V (x) V; index of e_a (x) e_b is a * dim + b.
  CycloMatrix braiding_matrix() const;

private:
  Kind kind_ = Kind::diagonal;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  DiagonalBraiding diag_;
  Rack rack_;
  RackCocycle cocycle_;
  std::vector<RackElement> element_of_;
  std::vector<std::vector<BraidTerm>> table_;
  std::vector<std::vector<BraidTerm>> inverse_table_;
};

std::vector<BraidTerm> braiding_apply(const BraidedVectorSpace& v, std::uint32_t a, std::uint32_t b);

struct BraidCheck {
  bool ok = true;
  std::vector<std::uint32_t> instance;  // basis triple
};

/// (c (x) id)(id (x) c)(c (x) id) = (id (x) c)(c (x) id)(id (x) c) on every basis triple.
BraidCheck check_braid_equation(const BraidedVectorSpace& v);

/// Homogeneous components preserved by the braiding: the multidegree for
/// diagonal type, the product of the inner automorphisms x |> - for rack
/// type.  Grades are interned lazily; not thread-safe.
class Grading {
public:
  explicit Grading(const BraidedVectorSpace& v);
  static constexpr std::uint32_t unit = 0;
  /// Grade of w x_letter given the grade of w.
  std::uint32_t step(std::uint32_t grade, std::uint32_t letter);
  std::uint32_t of_word(const std::vector<std::uint32_t>& word);
  std::size_t size() const { return keys_.size(); }

private:
  bool diagonal_;
  std::size_t dim_;
  std::vector<std::vector<std::uint32_t>> letter_perm_;
  std::vector<std::vector<std::uint32_t>> keys_;
  std::map<std::vector<std::uint32_t>, std::uint32_t> index_;
  std::vector<std::vector<std::int64_t>> next_;
  std::uint32_t intern(std::vector<std::uint32_t> key);
};

/// Finite abelian group Z_{m_1} x ... x Z_{m_r}; elements and characters are
/// exponent vectors, chi(g) = prod zeta_{m_t}^{chi_t g_t}.
struct FiniteAbelianGroup {
  std::vector<unsigned> factors;

  std::uint64_t order() const;
  unsigned exponent() const;
  std::vector<unsigned> element(std::uint64_t index) const;
  /// chi(g) as a power of zeta_exponent.
  unsigned pairing(const std::vector<unsigned>& chi, const std::vector<unsigned>& g) const;
  CycloNumber character_value(const std::vector<unsigned>& chi, const std::vector<unsigned>& g) const;

  bool operator==(const FiniteAbelianGroup&) const = default;
};

struct YDDatumDiagonal {
  FiniteAbelianGroup group;
  std::vector<std::vector<unsigned>> g;
  std::vector<std::vector<unsigned>> chi;

  /// chi_j(g_i).
  CycloMatrix braiding_matrix() const;

  bool operator==(const YDDatumDiagonal&) const = default;
};

/// Every ((g_i), (chi_i)) with chi_j(g_i) = q_ij.  BudgetExceeded when
/// |G|^theta |G^|^theta exceeds the cap.
std::vector<YDDatumDiagonal> realize_diagonal_over_group(const CycloMatrix& q, const FiniteAbelianGroup& group,
                                                         std::uint64_t cap = 100'000'000);

/// YD-datum of rack type (X, q, G, ., g, chi) with G a permutation group.
/// action[h][j] = h . j and chi[i][h] = chi_i(h), h indexing group.elements().
struct YDDatumRack {
  Rack rack;
  std::vector<std::vector<CycloNumber>> q;
  PermGroup group{{}};
  std::vector<std::vector<RackElement>> action;
  std::vector<std::size_t> g;
  std::vector<std::vector<CycloNumber>> chi;

  /// G acting on a conjugacy-class rack by conjugation, g the inclusion, and
  /// chi_i = chi for a character given on the group elements.
  static YDDatumRack conjugation(const Rack& x, const PermGroup& group, const std::vector<std::vector<CycloNumber>>& q,
                                 const std::vector<CycloNumber>& character);
};

struct CheckItem {
  std::string name;
  bool ok = true;
  std::string detail;

  bool operator==(const CheckItem&) const = default;
};

struct Report {
  std::vector<CheckItem> items;
  bool ok() const;
  const CheckItem* find(const std::string& name) const;

  bool operator==(const Report&) const = default;
};

/// Checks "action", "equivariance", "rack compatibility" (g_i . j = i |> j),
/// "1-cocycle" and "braiding compatibility" (chi_i(g_j) = q_ij).
Report validate_yd_rack_datum(const YDDatumRack& d);

}  // namespace nichols
