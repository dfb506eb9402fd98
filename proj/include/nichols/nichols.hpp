#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichols/braided.hpp"
#include "nichols/errors.hpp"
#include "nichols/tensor.hpp"

namespace nichols {

using SparseColumn = std::vector<std::pair<std::uint32_t, CycloNumber>>;

/// Data of one degree n of B(V).  Candidates of degree n are the pairs
/// (b, j) of a basis element b of B^{n-1} and a generator j, indexed b * dim V + j.
struct DegreeData {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> preimage;  // (b, j) per basis element
  std::vector<Word> words;                                        // monomial preimages
  std::vector<std::uint32_t> grades;
  /// split[b]: D_n(e_b) in B^{n-1} (x) V, entry a * dim V + m.
  std::vector<SparseColumn> split;
  /// mult[b * dim V + j]: class of e_b x_j in B^n, for b in B^{n-1}.
  std::vector<SparseColumn> mult;
  /// left[i * d_{n-1} + b]: class of x_i e_b in B^n (relation reports only).
  std::vector<SparseColumn> left;
  /// Relations of degree n as combinations of candidates (relation reports only).
  std::vector<SparseColumn> kernel;

  std::size_t dim() const { return words.size(); }
};

struct EngineOptions {
  /// Stop after this degree; run until d_n = 0 when unset.
  std::optional<std::size_t> max_degree;
  Budget budget;
  bool relations = false;
  bool relation_bases = false;
  unsigned threads = 1;
};

struct NicholsTruncation {
  std::size_t theta = 0;
  /// d_0, ..., d_top; the vanishing degree is not listed.
  std::vector<std::size_t> dims;
  std::vector<DegreeData> degrees;
  /// Some d_n = 0 was reached.
  bool completed = false;
  /// The budget ran out; dims is a prefix.
  bool incomplete = false;
  std::string incomplete_reason;
  std::vector<std::string> warnings;

  /// Per computed degree n (index n, including the vanishing degree).
  std::vector<mpz_class> ideal_dims;
  std::vector<std::size_t> new_relations;
  std::vector<std::vector<TensorVector>> new_relation_bases;

  mpz_class total() const;
  /// Degrees n >= 2 with new relations.
  std::vector<std::size_t> relation_degrees() const;
  /// "1, 3, 4, 3, 1 | total 12 | complete".
  std::string summary() const;
};

/// Degreewise B(V) through D_n(u x_j) = u (x) x_j + sum (mu (x) id)(id (x) c)(D_{n-1}(u) (x) x_j).
/// Throws InputError for a diagonal entry q_ii = 1.
NicholsTruncation hilbert_series(const BraidedVectorSpace& v, const EngineOptions& options = {});

/// Sum of the Hilbert series, or nullopt when the budget ran out first.
std::optional<mpz_class> total_dimension(const BraidedVectorSpace& v, const Budget& budget = {}, unsigned threads = 1);

NicholsTruncation relation_report(const BraidedVectorSpace& v, std::size_t max_degree, const Budget& budget = {},
                                  bool bases = false);

bool is_palindromic(const std::vector<std::size_t>& dims);

/// -min{m : ad_c(x_i)^{m+1}(x_j) in J}; nullopt if no such m <= h_max.
std::optional<int> cartan_coefficient(const BraidedVectorSpace& v, std::size_t i, std::size_t j, std::size_t h_max);

struct CartanProfile {
  std::vector<std::vector<int>> matrix;
  /// witness[i][j] = m + 1 with ad_c(x_i)^{m+1}(x_j) = 0 in B(V); 0 on the diagonal.
  std::vector<std::vector<std::size_t>> witness;
};

/// nullopt if some pair does not stabilize within h_max.
std::optional<CartanProfile> cartan_profile(const BraidedVectorSpace& v, std::size_t h_max);

struct OracleReport {
  bool match = true;
  std::optional<std::size_t> first_mismatch;
  std::vector<std::size_t> engine;
  std::vector<std::size_t> oracle;
};

/// Compares d_n with symmetrizer_rank(V, n) for n <= n_max.
OracleReport verify_against_oracle(const BraidedVectorSpace& v, std::size_t n_max, const Budget& budget = {});

}  // namespace nichols
