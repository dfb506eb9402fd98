#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nichols/braided.hpp"
#include "nichols/errors.hpp"
#include "nichols/groupoid.hpp"

namespace nichols {

struct CartanDatumCheck {
  /// Items "shape", "cartan matrix", "compatibility", "q_ii != 1", "constant N".
  Report report;
  /// Connected components of the Dynkin diagram, each sorted.
  std::vector<std::vector<std::size_t>> components;
  /// N_J = ord q_ii for the smallest i in J.
  std::vector<unsigned> n;

  bool operator==(const CartanDatumCheck&) const = default;
};

/// q_ij q_ji = q_ii^{a_ij} for i != j with a of finite type.
CartanDatumCheck validate_cartan_datum(const YDDatumDiagonal& d, const IntMatrix& a);

/// lambda[(i, j)] for i < j in different components, values 0 or 1; mu[k] for the
/// k-th root of classical_positive_roots(a).
struct CartanLiftingParams {
  std::map<std::pair<std::size_t, std::size_t>, int> lambda;
  std::vector<CycloNumber> mu;
};

/// Items "cartan datum", "lambda domain", "lambda vanishing", "mu length", "mu vanishing".
Report validate_lifting_params_cartan(const YDDatumDiagonal& d, const IntMatrix& a, const CartanLiftingParams& p);

enum class LiftingKind { O3_2, O4_2, X4w, X5_2, X5_3 };

const std::vector<LiftingKind>& all_lifting_kinds();
/// "O3_2", "O4_2", "X4w", "X5_2", "X5_3"; InputError otherwise.
LiftingKind parse_lifting_kind(const std::string& s);
std::string to_string(LiftingKind k);

Rack lifting_rack(LiftingKind k);
/// (X, -1).
BraidedVectorSpace lifting_braided_space(LiftingKind k);
/// m with dim A = m |G|.
unsigned lifting_dimension(LiftingKind k);
std::size_t lifting_parameter_count(LiftingKind k);

/// S_n with the sign character for O^n_2; Inn(X) x Z_2 with the Z_2 sign for the affine racks.
YDDatumRack standard_lifting_datum(LiftingKind k);

/// One item per vanishing condition, plus "datum", "constant character", "parameter count".
Report validate_lifting_params_rack(LiftingKind k, const YDDatumRack& d, const std::vector<CycloNumber>& lambda);

struct MultiplierCheck {
  unsigned multiplier = 0;
  mpz_class engine;
  bool consistent = false;

  bool operator==(const MultiplierCheck&) const = default;
};

/// lifting_dimension(k) against total_dimension((X, -1)); BudgetExceeded if the engine does not finish.
MultiplierCheck lifting_multiplier_consistency(LiftingKind k, const Budget& budget = {}, unsigned threads = 1);

}  // namespace nichols
