#include "nichols/tensor.hpp"

#include "nichols/errors.hpp"

namespace nichols {

TensorVector TensorVector::basis(const Word& w) {
  TensorVector t(w.size());
  t.terms_.emplace(w, CycloNumber(1));
  return t;
}

CycloNumber TensorVector::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CycloNumber() : it->second;
}

void TensorVector::add(const Word& w, const CycloNumber& c) {
  if (w.size() != degree_) throw InputError("word length does not match tensor degree");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
  if (o.degree_ != degree_ && !o.is_zero()) throw InputError("adding tensors of different degrees");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
  if (o.degree_ != degree_ && !o.is_zero()) throw InputError("adding tensors of different degrees");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

TensorVector& TensorVector::operator*=(const CycloNumber& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

TensorVector TensorVector::tensor(const TensorVector& o) const {
  TensorVector out(degree_ + o.degree_);
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      out.add(w, x * y);
    }
  return out;
}

std::string TensorVector::to_string(const BraidedVectorSpace& v) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    for (std::size_t p = 0; p < w.size(); ++p) out += (p ? " (x) " : " ") + v.labels()[w[p]];
  }
  return out;
}

TensorVector apply_sigma(const BraidedVectorSpace& v, std::size_t i, const TensorVector& t, bool inverse) {
  if (i == 0 || i >= t.degree()) throw InputError("braid generator index out of range");
  TensorVector out(t.degree());
  for (const auto& [w, c] : t.terms()) {
    if (w[i - 1] >= v.dim() || w[i] >= v.dim()) throw InputError("basis index out of range");
    const auto& terms = inverse ? v.inverse_terms(w[i - 1], w[i]) : v.terms(w[i - 1], w[i]);
    for (const auto& term : terms) {
      Word u = w;
      u[i - 1] = term.left;
      u[i] = term.right;
      out.add(u, c * term.coef);
    }
  }
  return out;
}

TensorVector adjoint_apply(const BraidedVectorSpace& v, const TensorVector& x, const TensorVector& y) {
  if (x.degree() != 1) throw InputError("adjoint action is defined here for x of degree 1 only");
  TensorVector xy = x.tensor(y);
  TensorVector moved = xy;
  for (std::size_t i = 1; i <= y.degree(); ++i) moved = apply_sigma(v, i, moved);
  xy -= moved;
  return xy;
}

}  // namespace nichols
