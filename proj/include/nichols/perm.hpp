#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nichols {

/// Permutation of {0, ..., n-1}, stored by images.  Permutations of
/// different degrees compare and compose as if padded with fixed points.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  /// Parses disjoint cycles with one-based, whitespace-separated points,
  /// e.g. "(1 2)(3 4 5)"; "()" is the identity.  Throws InputError.
  static Permutation parse_cycles(std::string_view text);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return x < images_.size() ? images_[x] : x; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  /// (a * b)(x) = a(b(x)): apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  Permutation conjugate_by(const Permutation& g) const { return g * *this * g.inverse(); }
  bool is_identity() const;
  int sign() const;
  std::size_t order() const;
  /// Sorted cycle lengths including fixed points up to degree().
  std::vector<std::size_t> cycle_type() const;
  Permutation padded(std::size_t degree) const;

  friend bool operator==(const Permutation& a, const Permutation& b);
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b);

  /// One-based cycle notation; identity prints as "()".
  std::string to_cycle_string() const;

private:
  std::vector<std::uint32_t> images_;
  void trim();
};

/// Finite permutation group given by generators; elements are enumerated
/// by breadth-first closure up to a cap (BudgetExceeded beyond it).
class PermGroup {
public:
  explicit PermGroup(std::vector<Permutation> generators, std::size_t order_cap = 1'000'000);

  const std::vector<Permutation>& generators() const { return gens_; }
  /// Enumerated elements, identity first, breadth-first order.
  const std::vector<Permutation>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Permutation& p) const;
  std::size_t index_of(const Permutation& p) const;

  /// Conjugacy class of x (orbit under conjugation by the generators).
  std::vector<Permutation> conjugacy_class(const Permutation& x, std::size_t cap) const;

private:
  std::vector<Permutation> gens_;
  std::size_t cap_;
  mutable std::vector<Permutation> elements_;
  mutable bool enumerated_ = false;
};

}  // namespace nichols
