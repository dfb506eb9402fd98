#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nichols/braided.hpp"

namespace nichols {

using IntVector = std::vector<long>;
using IntMatrix = std::vector<std::vector<long>>;

/// Points with involutions rho_i; rho[i][x] = rho_i(x).
struct BasicDatum {
  std::vector<std::string> points;
  std::vector<std::vector<std::size_t>> rho;

  std::size_t size() const { return points.size(); }
  std::size_t rank() const { return rho.size(); }
  /// Throws InputError unless every rho_i is an involution of the point set.
  void validate() const;

  bool operator==(const BasicDatum&) const = default;
};

/// (X, rho, C, Delta); roots[x] is the full set Delta^x, positive and negative.
struct GRSDatum {
  BasicDatum basic;
  std::vector<IntMatrix> cartan;
  std::vector<std::vector<IntVector>> roots;
};

/// s_i(beta) = beta - (sum_j c_ij beta_j) alpha_i.
IntVector reflect_root(const IntMatrix& c, std::size_t i, const IntVector& beta);
/// Matrix of s_i: column j is s_i(alpha_j).
IntMatrix reflection_matrix(const IntMatrix& c, std::size_t i);

/// m_ij = |Delta cap (N_0 alpha_i + N_0 alpha_j)| for i != j, m_ii = 1.
IntMatrix coxeter_matrix_from_roots(const std::vector<IntVector>& roots, std::size_t rank);

/// Items "generalized cartan", "cartan compatibility", "positive and negative",
/// "simple multiples", "reflection invariance", "coxeter points".
Report check_grs_axioms(const GRSDatum& r);

/// Morphism of the Weyl groupoid with w(Delta^source) = Delta^target.
struct Morphism {
  std::size_t source;
  std::size_t target;
  IntMatrix w;
};

struct WeylGroupoid {
  BasicDatum basic;
  std::vector<IntMatrix> cartan;
  /// Every morphism, each (source, w, target) once.
  std::vector<Morphism> morphisms;
  /// coxeter[x][i][j]: smallest m with (s_i s_j)^m = id at x, 0 if none below the cap.
  std::vector<IntMatrix> coxeter;

  /// varsigma_i^x: x -> rho_i(x) with matrix s_i^x.
  Morphism generator(std::size_t i, std::size_t x) const;
};

/// Closure of the identities under the generators; BudgetExceeded past max_morphisms.
WeylGroupoid generate_weyl_groupoid(const BasicDatum& basic, const std::vector<IntMatrix>& cartan,
                                    std::size_t max_morphisms = 200'000, std::size_t max_coxeter = 64);

/// (varsigma_i^x varsigma_j)^{m[x][i][j]} = id_x for all x, i, j, generators composed along the path from x.
Report coxeter_relations_check(const WeylGroupoid& w, const std::vector<IntMatrix>& m);

struct RootClosure {
  bool finite = false;
  std::string reason;
  /// Full real-root sets per point.
  std::vector<std::vector<IntVector>> roots;
};

/// Real roots: the closure of {+-alpha_i} at every point under the s_i^x.
RootClosure real_root_closure(const BasicDatum& basic, const std::vector<IntMatrix>& cartan,
                              std::size_t max_height = 256, std::size_t max_roots = 200'000);

/// Positive roots of a Cartan matrix of finite type (single point); nullopt if the closure does not terminate.
std::optional<std::vector<IntVector>> classical_positive_roots(const IntMatrix& a, std::size_t max_height = 256);

std::vector<IntVector> positive_part(const std::vector<IntVector>& roots);

struct DiagonalWeylCaps {
  std::size_t h_max = 64;
  std::size_t max_points = 2000;
  std::size_t max_height = 256;
  std::size_t max_roots = 200'000;
};

struct DiagonalWeylResult {
  enum class Status { finite, undecided };
  Status status = Status::undecided;
  std::string reason;
  /// Common order N with q_ij = zeta_N^{exponents[x][i][j]} at each point.
  unsigned conductor = 1;
  std::vector<std::vector<std::vector<long>>> exponents;
  BasicDatum basic;
  std::vector<IntMatrix> cartan;
  std::vector<std::vector<IntVector>> roots;

  DiagonalBraiding point(std::size_t x) const { return DiagonalBraiding::from_exponents(conductor, exponents[x]); }
  GRSDatum grs() const { return {basic, cartan, roots}; }

  bool operator==(const DiagonalWeylResult&) const = default;
};

/// Points are twist classes (q_ii, q_ij q_ji); rho_i(q)_{jk} = q(s_i(alpha_j), s_i(alpha_k)) for the bicharacter
/// q(a, b) = prod q_kl^{a_k b_l}.  Cartan entries come from cartan_coefficient.
DiagonalWeylResult weyl_groupoid_of_diagonal(const DiagonalBraiding& q, const DiagonalWeylCaps& caps = {});

/// q(a, b) = prod q_kl^{a_k b_l}.
CycloNumber bicharacter(const DiagonalBraiding& q, const IntVector& a, const IntVector& b);

/// prod over positive roots of ord q(beta, beta); nullopt if some q(beta, beta) = 1.
std::optional<mpz_class> dimension_from_roots(const DiagonalBraiding& q, const std::vector<IntVector>& positive_roots);

/// prod_J N_J^{|Phi_J^+|} |Gamma| for a Cartan datum; InputError otherwise.
mpz_class u_dimension(const YDDatumDiagonal& d, const IntMatrix& a);

}  // namespace nichols
