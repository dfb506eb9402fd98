#include "nichols/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

#include "nichols/errors.hpp"

namespace nichols {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw InputError("not a permutation");
    seen[v] = true;
  }
  trim();
}

void Permutation::trim() {
  while (!images_.empty() && images_.back() == images_.size() - 1) images_.pop_back();
}

Permutation Permutation::parse_cycles(std::string_view text) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  std::uint32_t max_point = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw InputError("empty cycle notation");
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::uint32_t> cyc;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw InputError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("unexpected character in cycle notation: " + std::string(text));
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > 1'000'000) throw InputError("point too large in cycle notation");
        ++i;
      }
      if (v == 0) throw InputError("points are one-based");
      cyc.push_back(static_cast<std::uint32_t>(v - 1));
      max_point = std::max(max_point, static_cast<std::uint32_t>(v));
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  std::vector<std::uint32_t> img(max_point);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<bool> used(max_point, false);
  for (const auto& cyc : cycles) {
    for (auto p : cyc) {
      if (used[p]) throw InputError("cycles are not disjoint: " + std::string(text));
      used[p] = true;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) img[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return Permutation(std::move(img));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  const std::size_t n = std::max(a.degree(), b.degree());
  std::vector<std::uint32_t> img(n);
  for (std::uint32_t x = 0; x < n; ++x) img[x] = a(b(x));
  Permutation r;
  r.images_ = std::move(img);
  r.trim();
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::uint32_t x = 0; x < images_.size(); ++x) r.images_[images_[x]] = x;
  return r;
}

bool Permutation::is_identity() const { return images_.empty(); }

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lens;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::uint32_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

int Permutation::sign() const {
  int s = 1;
  for (auto len : cycle_type())
    if (len % 2 == 0) s = -s;
  return s;
}

std::size_t Permutation::order() const {
  std::size_t o = 1;
  for (auto len : cycle_type()) o = std::lcm(o, len);
  return o;
}

Permutation Permutation::padded(std::size_t degree) const {
  Permutation r;
  r.images_ = images_;
  for (auto x = static_cast<std::uint32_t>(r.images_.size()); x < degree; ++x) r.images_.push_back(x);
  return r;
}

bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += "(";
    bool first = true;
    for (std::uint32_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first) out += " ";
      out += std::to_string(y + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

PermGroup::PermGroup(std::vector<Permutation> generators, std::size_t order_cap)
    : gens_(std::move(generators)), cap_(order_cap) {}

const std::vector<Permutation>& PermGroup::elements() const {
  if (enumerated_) return elements_;
  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  const Permutation id;
  seen.insert(id);
  queue.push_back(id);
  elements_.clear();
  while (!queue.empty()) {
    Permutation g = std::move(queue.front());
    queue.pop_front();
    elements_.push_back(g);
    for (const auto& s : gens_) {
      Permutation h = s * g;
      if (seen.insert(h).second) {
        if (seen.size() > cap_) throw BudgetExceeded("group order exceeds cap");
        queue.push_back(std::move(h));
      }
    }
  }
  enumerated_ = true;
  return elements_;
}

bool PermGroup::contains(const Permutation& p) const {
  const auto& els = elements();
  return std::find(els.begin(), els.end(), p) != els.end();
}

std::size_t PermGroup::index_of(const Permutation& p) const {
  const auto& els = elements();
  auto it = std::find(els.begin(), els.end(), p);
  if (it == els.end()) throw InputError("element not in group: " + p.to_cycle_string());
  return static_cast<std::size_t>(it - els.begin());
}

std::vector<Permutation> PermGroup::conjugacy_class(const Permutation& x, std::size_t cap) const {
  std::vector<Permutation> orbit{x};
  std::set<Permutation> seen{x};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& s : gens_) {
      Permutation y = orbit[i].conjugate_by(s);
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw BudgetExceeded("conjugacy class exceeds cap");
        orbit.push_back(std::move(y));
      }
    }
  }
  std::sort(orbit.begin(), orbit.end(), [](const Permutation& a, const Permutation& b) {
    return a.to_cycle_string() < b.to_cycle_string();
  });
  return orbit;
}

}  // namespace nichols
