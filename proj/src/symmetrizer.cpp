#include "nichols/symmetrizer.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>

#include "nichols/parallel.hpp"

namespace nichols {

void BraidWord::validate() const {
  for (int l : letters)
    if (l == 0 || static_cast<std::size_t>(l < 0 ? -l : l) >= strands)
      throw InputError("braid letter " + std::to_string(l) + " out of range for " + std::to_string(strands) +
                       " strands");
}

BraidWord BraidWord::inverse() const {
  BraidWord w{strands, {}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
  return w;
}

BraidWord matsumoto_lift(const Permutation& w, std::size_t n) {
  if (w.degree() > n) throw InputError("permutation moves points beyond the strand count");
  std::vector<std::uint32_t> img(n);
  for (std::uint32_t x = 0; x < n; ++x) img[x] = w(x);
  BraidWord out{n, {}};
  // peel off c_j = s_k ... s_{j-1} (j -> k, k..j-1 shifted up), w = c_j w'
  for (std::size_t j = n; j >= 2; --j) {
    const std::uint32_t k = img[j - 1] + 1;
    for (std::size_t l = k; l < j; ++l) out.letters.push_back(static_cast<int>(l));
    for (std::size_t x = 0; x < j - 1; ++x)
      if (img[x] + 1 > k) --img[x];
  }
  return out;
}

TensorVector apply_braid_word(const BraidedVectorSpace& v, const BraidWord& w, const TensorVector& t) {
  w.validate();
  if (t.degree() != w.strands) throw InputError("tensor degree does not match the strand count");
  TensorVector out = t;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out = apply_sigma(v, static_cast<std::size_t>(*it < 0 ? -*it : *it), out, *it < 0);
  return out;
}

TensorVector quantum_symmetrizer_apply(const BraidedVectorSpace& v, std::size_t n, const TensorVector& t) {
  if (t.degree() != n && !t.is_zero()) throw InputError("tensor degree does not match n");
  TensorVector cur = t;
  for (std::size_t m = 2; m <= n; ++m) {
    TensorVector u = cur;
    for (std::size_t k = m - 1; k >= 1; --k) {
      u = apply_sigma(v, k, u);
      cur += u;
    }
  }
  return cur;
}

bool ideal_membership(const BraidedVectorSpace& v, const TensorVector& t) {
  return quantum_symmetrizer_apply(v, t.degree(), t).is_zero();
}

namespace {

using Sparse = std::vector<std::pair<std::uint64_t, CycloNumber>>;

void canonicalize(Sparse& s) {
  std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i + 1;
    CycloNumber c = std::move(s[i].second);
    for (; j < s.size() && s[j].first == s[i].first; ++j) c += s[j].second;
    if (!c.is_zero()) s[out++] = {s[i].first, std::move(c)};
    i = j;
  }
  s.resize(out);
}

struct Codec {
  std::size_t dim;
  std::vector<std::uint64_t> pw;  // pw[k] = dim^k

  std::uint64_t power(std::size_t m, std::size_t p) const { return pw[m - 1 - p]; }
};

// sigma_i on a degree-m vector, words encoded with position 0 most significant.
Sparse sigma(const BraidedVectorSpace& v, const Codec& c, std::size_t m, std::size_t i, const Sparse& s) {
  const std::uint64_t p0 = c.power(m, i - 1), p1 = c.power(m, i);
  Sparse out;
  out.reserve(s.size());
  for (const auto& [code, coef] : s) {
    const auto a = static_cast<std::uint32_t>((code / p0) % c.dim);
    const auto b = static_cast<std::uint32_t>((code / p1) % c.dim);
    const std::uint64_t rest = code - a * p0 - b * p1;
    for (const auto& t : v.terms(a, b)) out.emplace_back(rest + t.left * p0 + t.right * p1, coef * t.coef);
  }
  canonicalize(out);
  return out;
}

Sparse subtract_multiple(const Sparse& a, const CycloNumber& f, const Sparse& b) {
  Sparse out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      CycloNumber x = a[i].second;
      x.sub_mul(f, b[j].second);
      if (!x.is_zero()) out.emplace_back(a[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

// Echelon basis of one grade block; pivots are leading (smallest) codes.
struct Block {
  std::vector<Sparse> rows;
  std::unordered_map<std::uint64_t, std::size_t> pivot;
  std::uint64_t entries = 0;

  void insert(Sparse s) {
    while (!s.empty()) {
      auto it = pivot.find(s.front().first);
      if (it == pivot.end()) {
        const CycloNumber inv = s.front().second.inv();
        for (auto& [code, x] : s) x *= inv;
        pivot.emplace(s.front().first, rows.size());
        entries += s.size();
        rows.push_back(std::move(s));
        return;
      }
      const CycloNumber f = s.front().second;
      s = subtract_multiple(s, f, rows[it->second]);
    }
  }
};

struct Source {
  std::uint32_t grade;
  std::uint32_t letter;
};

}  // namespace

std::vector<std::size_t> symmetrizer_ranks(const BraidedVectorSpace& v, std::size_t n, const Budget& budget,
                                           unsigned threads) {
  BudgetClock clock(budget);
  const std::size_t d = v.dim();
  std::vector<std::size_t> ranks{1};
  if (n == 0) return ranks;
  ranks.push_back(d);
  if (d == 0) {
    ranks.resize(n + 1, 0);
    return ranks;
  }
  Codec codec{d, {1}};
  for (std::size_t p = 1; p < n; ++p) {
    if (codec.pw.back() > UINT64_MAX / d) throw BudgetExceeded("tensor power too large to encode");
    codec.pw.push_back(codec.pw.back() * d);
  }
  Grading grading(v);
  std::vector<Block> current;  // indexed by grade
  auto block_at = [](std::vector<Block>& blocks, std::uint32_t g) -> Block& {
    if (blocks.size() <= g) blocks.resize(g + 1);
    return blocks[g];
  };
  for (std::uint32_t a = 0; a < d; ++a) {
    Sparse s{{a, CycloNumber(1)}};
    block_at(current, grading.step(Grading::unit, a)).insert(std::move(s));
  }
  for (std::size_t m = 2; m <= n; ++m) {
    if (ranks.back() == 0) {
      ranks.push_back(0);
      continue;
    }
    std::map<std::uint32_t, std::vector<Source>> jobs;
    for (std::uint32_t g = 0; g < current.size(); ++g) {
      if (current[g].rows.empty()) continue;
      for (std::uint32_t a = 0; a < d; ++a) jobs[grading.step(g, a)].push_back({g, a});
    }
    std::vector<std::pair<std::uint32_t, std::vector<Source>>> job_list(jobs.begin(), jobs.end());
    std::vector<Block> next(job_list.size());
    std::atomic<std::uint64_t> entries{0};
    parallel_for(job_list.size(), threads, [&](std::size_t idx) {
      Block& out = next[idx];
      for (const Source& src : job_list[idx].second)
        for (const Sparse& row : current[src.grade].rows) {
          // R'_m applied to row (x) x_letter
          Sparse u;
          u.reserve(row.size());
          for (const auto& [code, x] : row) u.emplace_back(code * d + src.letter, x);
          Sparse acc = u;
          for (std::size_t k = m - 1; k >= 1; --k) {
            u = sigma(v, codec, m, k, u);
            acc.insert(acc.end(), u.begin(), u.end());
          }
          canonicalize(acc);
          const std::uint64_t before = out.entries;
          out.insert(std::move(acc));
          clock.check(entries += out.entries - before);
        }
    });
    std::vector<Block> regraded;
    std::size_t rank = 0;
    for (std::size_t idx = 0; idx < job_list.size(); ++idx) {
      rank += next[idx].rows.size();
      block_at(regraded, job_list[idx].first) = std::move(next[idx]);
    }
    current = std::move(regraded);
    ranks.push_back(rank);
  }
  return ranks;
}

std::size_t symmetrizer_rank(const BraidedVectorSpace& v, std::size_t n, const Budget& budget, unsigned threads) {
  return symmetrizer_ranks(v, n, budget, threads).back();
}

}  // namespace nichols
