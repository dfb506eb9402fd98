#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nichols/braided.hpp"
#include "nichols/cyclo.hpp"

namespace nichols {

using Word = std::vector<std::uint32_t>;

/// Element of V^{(x) n} as a sparse combination of basis words.
class TensorVector {
public:
  explicit TensorVector(std::size_t degree = 0) : degree_(degree) {}
  static TensorVector basis(const Word& w);

  std::size_t degree() const { return degree_; }
  const std::map<Word, CycloNumber>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  CycloNumber coefficient(const Word& w) const;

  /// Throws InputError if the word length differs from the degree.
  void add(const Word& w, const CycloNumber& c);
  TensorVector& operator+=(const TensorVector& o);
  TensorVector& operator-=(const TensorVector& o);
  TensorVector& operator*=(const CycloNumber& c);
  /// Concatenation of tensor factors.
  TensorVector tensor(const TensorVector& o) const;

  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  std::string to_string(const BraidedVectorSpace& v) const;

private:
  std::size_t degree_;
  std::map<Word, CycloNumber> terms_;
};

/// sigma_i (1-based) = c acting on positions i, i+1; its inverse when inverse is set.
TensorVector apply_sigma(const BraidedVectorSpace& v, std::size_t i, const TensorVector& t, bool inverse = false);

/// ad_c(x)(y) = x y - (sigma_m ... sigma_1)(x (x) y) for x of degree 1 and y of degree m.
TensorVector adjoint_apply(const BraidedVectorSpace& v, const TensorVector& x, const TensorVector& y);

}  // namespace nichols
