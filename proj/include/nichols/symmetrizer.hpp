#pragma once

#include <cstddef>
#include <vector>

#include "nichols/braided.hpp"
#include "nichols/errors.hpp"
#include "nichols/perm.hpp"
#include "nichols/tensor.hpp"

namespace nichols {

/// Word in the braid group on n strands; letter +i is sigma_i, -i its inverse.
/// The word l_1 ... l_k acts as sigma_{l_1} ... sigma_{l_k}, so l_k acts first.
struct BraidWord {
  std::size_t strands = 0;
  std::vector<int> letters;

  /// Throws InputError for letters outside +-[1, n-1].
  void validate() const;
  BraidWord inverse() const;
};

/// Staircase reduced word of w in S_n lifted to positive generators:
/// w = c_n c_{n-1} ... c_2 with c_j = s_{k_j} s_{k_j + 1} ... s_{j-1} and k_j = w_j(j).
BraidWord matsumoto_lift(const Permutation& w, std::size_t n);

TensorVector apply_braid_word(const BraidedVectorSpace& v, const BraidWord& w, const TensorVector& t);

/// Q_n(t) through Q_n = R'_n (Q_{n-1} (x) id), R'_n = sum_k sigma_k sigma_{k+1} ... sigma_{n-1}.
TensorVector quantum_symmetrizer_apply(const BraidedVectorSpace& v, std::size_t n, const TensorVector& t);

/// Q_n(t) = 0, with n the degree of t.
bool ideal_membership(const BraidedVectorSpace& v, const TensorVector& t);

/// rank Q_n = dim B^n(V), from im Q_n = R'_n(im Q_{n-1} (x) V) split by grade.
std::size_t symmetrizer_rank(const BraidedVectorSpace& v, std::size_t n, const Budget& budget = {},
                             unsigned threads = 1);

/// Ranks for degrees 0..n, sharing the recursion.
std::vector<std::size_t> symmetrizer_ranks(const BraidedVectorSpace& v, std::size_t n, const Budget& budget = {},
                                           unsigned threads = 1);

}  // namespace nichols
