#include "nichols/nichols.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <unordered_map>

#include "nichols/parallel.hpp"
#include "nichols/symmetrizer.hpp"

namespace nichols {

namespace {

void canonicalize(SparseColumn& s) {
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

// a + f b
SparseColumn axpy(const SparseColumn& a, const CycloNumber& f, const SparseColumn& b) {
  SparseColumn out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f * b[j].second);
      ++j;
    } else {
      CycloNumber x = a[i].second;
      x.add_mul(f, b[j].second);
      if (!x.is_zero()) out.emplace_back(a[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

void scale(SparseColumn& s, const CycloNumber& f) {
  for (auto& [k, x] : s) x *= f;
}

// Echelon form with pivots at leading entries; rows optionally remember
// their expression in terms of the inserted vectors.
struct Echelon {
  struct Row {
    SparseColumn vec;
    SparseColumn expr;
  };
  std::unordered_map<std::uint32_t, std::size_t> pivot;
  std::vector<Row> rows;

  // Reduces v; returns true and stores it if independent.  coords receives
  // sum f_t expr_t for the rows used.
  bool insert(SparseColumn v, std::uint32_t id, bool track, SparseColumn* coords) {
    SparseColumn acc;
    while (!v.empty()) {
      auto it = pivot.find(v.front().first);
      if (it == pivot.end()) break;
      const Row& r = rows[it->second];
      const CycloNumber f = v.front().second;
      v = axpy(v, -f, r.vec);
      if (track) acc = axpy(acc, f, r.expr);
    }
    if (v.empty()) {
      if (coords) *coords = std::move(acc);
      return false;
    }
    const CycloNumber inv = v.front().second.inv();
    Row row;
    if (track) {
      row.expr = axpy(SparseColumn{{id, CycloNumber(1)}}, CycloNumber(-1), acc);
      scale(row.expr, inv);
    }
    scale(v, inv);
    row.vec = std::move(v);
    pivot.emplace(row.vec.front().first, rows.size());
    rows.push_back(std::move(row));
    return true;
  }
};

std::uint64_t entries_of(const std::vector<SparseColumn>& cols) {
  std::uint64_t n = 0;
  for (const auto& c : cols) n += c.size();
  return n;
}

void reject_trivial_self_braiding(const BraidedVectorSpace& v) {
  for (std::uint32_t a = 0; a < v.dim(); ++a) {
    const auto& t = v.terms(a, a);
    if (t.size() == 1 && t[0].left == a && t[0].right == a && t[0].coef.is_one())
      throw InputError("self-braiding of " + v.labels()[a] +
                       " is the identity (q_ii = 1): the Nichols algebra is infinite-dimensional");
  }
}

class Engine {
public:
  Engine(const BraidedVectorSpace& v, const EngineOptions& o, NicholsTruncation& out)
      : v_(v), opt_(o), out_(out), theta_(static_cast<std::uint32_t>(v.dim())), grading_(v), clock_(o.budget) {}

  void run() {
    out_.theta = theta_;
    DegreeData d0;
    d0.words.push_back({});
    d0.grades.push_back(Grading::unit);
    out_.degrees.push_back(std::move(d0));
    out_.dims.push_back(1);
    record_relations(0);
    if (theta_ == 0) {
      out_.completed = true;
      return;
    }
    for (std::size_t n = 1;; ++n) {
      if (opt_.max_degree && n > *opt_.max_degree) return;
      degree(n);
      const std::size_t dn = out_.degrees[n].dim();
      if (dn == 0) {
        out_.degrees.pop_back();
        out_.completed = true;
        return;
      }
      out_.dims.push_back(dn);
    }
  }

private:
  const BraidedVectorSpace& v_;
  const EngineOptions& opt_;
  NicholsTruncation& out_;
  std::uint32_t theta_;
  Grading grading_;
  BudgetClock clock_;
  std::atomic<std::uint64_t> entries_{0};

  void charge(std::uint64_t n) { clock_.check(entries_ += n); }

  // D_n(e_b x_j) = e_b (x) x_j + sum_{a,k} D_{n-1}(e_b)_{a,k} sum_{c(x_k (x) x_j) = sum x_l (x) x_m} mu_l(e_a) (x) x_m
  SparseColumn candidate_column(std::size_t n, std::uint32_t b, std::uint32_t j) const {
    SparseColumn col{{b * theta_ + j, CycloNumber(1)}};
    if (n >= 2) {
      const DegreeData& prev = out_.degrees[n - 1];
      for (const auto& [ak, x] : prev.split[b]) {
        const std::uint32_t a = ak / theta_, k = ak % theta_;
        for (const auto& t : v_.terms(k, j)) {
          const CycloNumber f = x * t.coef;
          for (const auto& [b2, y] : prev.mult[a * theta_ + t.left]) col.emplace_back(b2 * theta_ + t.right, f * y);
        }
      }
    }
    canonicalize(col);
    return col;
  }

  void degree(std::size_t n) {
    const DegreeData& prev = out_.degrees[n - 1];
    const std::uint32_t count = static_cast<std::uint32_t>(prev.dim()) * theta_;
    std::vector<std::uint32_t> cand_grade(count);
    std::map<std::uint32_t, std::vector<std::uint32_t>> blocks;
    for (std::uint32_t c = 0; c < count; ++c) {
      cand_grade[c] = grading_.step(prev.grades[c / theta_], c % theta_);
      blocks[cand_grade[c]].push_back(c);
    }
    std::vector<SparseColumn> columns(count);
    parallel_for(count, opt_.threads, [&](std::size_t c) {
      columns[c] = candidate_column(n, static_cast<std::uint32_t>(c / theta_), static_cast<std::uint32_t>(c % theta_));
      charge(columns[c].size());
    });

    std::vector<std::vector<std::uint32_t>> block_list;
    for (auto& [g, cs] : blocks) block_list.push_back(std::move(cs));
    std::vector<char> is_basis(count, 0);
    std::vector<SparseColumn> coords(count);
    parallel_for(block_list.size(), opt_.threads, [&](std::size_t bi) {
      Echelon e;
      for (std::uint32_t c : block_list[bi]) {
        is_basis[c] = e.insert(columns[c], c, true, &coords[c]);
        charge(is_basis[c] ? e.rows.back().vec.size() + e.rows.back().expr.size() : coords[c].size());
      }
    });

    DegreeData d;
    std::vector<std::uint32_t> index(count, 0);
    for (std::uint32_t c = 0; c < count; ++c) {
      if (!is_basis[c]) continue;
      index[c] = static_cast<std::uint32_t>(d.words.size());
      const std::uint32_t b = c / theta_, j = c % theta_;
      d.preimage.emplace_back(b, j);
      Word w = prev.words[b];
      w.push_back(j);
      d.words.push_back(std::move(w));
      d.grades.push_back(cand_grade[c]);
      d.split.push_back(std::move(columns[c]));
    }
    d.mult.resize(count);
    for (std::uint32_t c = 0; c < count; ++c) {
      if (is_basis[c]) {
        d.mult[c] = {{index[c], CycloNumber(1)}};
        continue;
      }
      for (const auto& [s, x] : coords[c]) d.mult[c].emplace_back(index[s], x);
      if (opt_.relations) {
        SparseColumn k;
        for (const auto& [s, x] : coords[c]) k.emplace_back(s, -x);
        k.emplace_back(c, CycloNumber(1));
        d.kernel.push_back(std::move(k));
      }
    }
    charge(entries_of(d.mult));
    out_.degrees.push_back(std::move(d));
    if (opt_.relations) {
      left_maps(n);
      record_relations(n);
    }
  }

  // left[i * d_{n-1} + b] = x_i e_b = (x_i e_{b'}) x_j for e_b = e_{b'} x_j.
  void left_maps(std::size_t n) {
    DegreeData& d = out_.degrees[n];
    const DegreeData& prev = out_.degrees[n - 1];
    const std::size_t dp = prev.dim();
    d.left.assign(theta_ * dp, {});
    for (std::uint32_t i = 0; i < theta_; ++i)
      for (std::uint32_t b = 0; b < dp; ++b) {
        SparseColumn& out = d.left[i * dp + b];
        if (n == 1) {
          out = d.mult[i];
          continue;
        }
        const auto [b1, j] = prev.preimage[b];
        for (const auto& [b2, x] : prev.left[i * out_.degrees[n - 2].dim() + b1])
          for (const auto& [b3, y] : d.mult[b2 * theta_ + j]) out.emplace_back(b3, x * y);
        canonicalize(out);
      }
    charge(entries_of(d.left));
  }

  // New relations: kernel of degree n modulo x_i (kernel of degree n-1).
  void record_relations(std::size_t n) {
    mpz_class total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= theta_;
    out_.ideal_dims.push_back(total - static_cast<unsigned long>(out_.degrees[n].dim()));
    out_.new_relations.push_back(0);
    out_.new_relation_bases.emplace_back();
    if (n < 2) return;
    const DegreeData& d = out_.degrees[n];
    const DegreeData& prev = out_.degrees[n - 1];
    const std::size_t dpp = out_.degrees[n - 2].dim();
    Echelon e;
    for (const SparseColumn& kappa : prev.kernel)
      for (std::uint32_t i = 0; i < theta_; ++i) {
        SparseColumn lk;
        for (const auto& [c, x] : kappa) {
          const std::uint32_t b = c / theta_, j = c % theta_;
          for (const auto& [b2, y] : prev.left[i * dpp + b]) lk.emplace_back(b2 * theta_ + j, x * y);
        }
        canonicalize(lk);
        e.insert(std::move(lk), 0, false, nullptr);
        clock_.check(entries_);
      }
    std::size_t fresh = 0;
    for (const SparseColumn& kappa : d.kernel) {
      if (!e.insert(kappa, 0, false, nullptr)) continue;
      ++fresh;
      if (opt_.relation_bases) {
        TensorVector t(n);
        for (const auto& [c, x] : kappa) {
          Word w = prev.words[c / theta_];
          w.push_back(c % theta_);
          t.add(w, x);
        }
        out_.new_relation_bases.back().push_back(std::move(t));
      }
    }
    out_.new_relations.back() = fresh;
  }
};

}  // namespace

mpz_class NicholsTruncation::total() const {
  mpz_class t = 0;
  for (auto d : dims) t += static_cast<unsigned long>(d);
  return t;
}

std::vector<std::size_t> NicholsTruncation::relation_degrees() const {
  std::vector<std::size_t> out;
  for (std::size_t n = 2; n < new_relations.size(); ++n)
    if (new_relations[n] > 0) out.push_back(n);
  return out;
}

std::string NicholsTruncation::summary() const {
  std::string s;
  for (std::size_t n = 0; n < dims.size(); ++n) s += (n ? ", " : "") + std::to_string(dims[n]);
  s += " | total " + total().get_str() + " | ";
  if (completed) return s + "complete";
  if (incomplete) return s + "incomplete (" + incomplete_reason + ")";
  return s + "truncated at degree " + std::to_string(dims.size() - 1);
}

NicholsTruncation hilbert_series(const BraidedVectorSpace& v, const EngineOptions& options) {
  reject_trivial_self_braiding(v);
  NicholsTruncation out;
  EngineOptions opt = options;
  if (opt.relation_bases) opt.relations = true;
  try {
    Engine(v, opt, out).run();
  } catch (const BudgetExceeded& e) {
    out.incomplete = true;
    out.incomplete_reason = e.what();
    out.degrees.resize(out.dims.size());
    out.ideal_dims.resize(std::min(out.ideal_dims.size(), out.dims.size()));
    out.new_relations.resize(out.ideal_dims.size());
    out.new_relation_bases.resize(out.ideal_dims.size());
  }
  if (out.completed && !is_palindromic(out.dims))
    out.warnings.push_back("Hilbert series is not palindromic");
  return out;
}

std::optional<mpz_class> total_dimension(const BraidedVectorSpace& v, const Budget& budget, unsigned threads) {
  EngineOptions o;
  o.budget = budget;
  o.threads = threads;
  auto t = hilbert_series(v, o);
  if (!t.completed) return std::nullopt;
  return t.total();
}

NicholsTruncation relation_report(const BraidedVectorSpace& v, std::size_t max_degree, const Budget& budget,
                                  bool bases) {
  EngineOptions o;
  o.max_degree = max_degree;
  o.budget = budget;
  o.relations = true;
  o.relation_bases = bases;
  return hilbert_series(v, o);
}

bool is_palindromic(const std::vector<std::size_t>& dims) {
  return std::equal(dims.begin(), dims.begin() + static_cast<long>(dims.size() / 2), dims.rbegin());
}

std::optional<int> cartan_coefficient(const BraidedVectorSpace& v, std::size_t i, std::size_t j, std::size_t h_max) {
  if (v.kind() != BraidedVectorSpace::Kind::diagonal) throw InputError("Cartan coefficients need a diagonal braiding");
  if (i == j || i >= v.dim() || j >= v.dim()) throw InputError("Cartan coefficient needs distinct indices in range");
  const TensorVector xi = TensorVector::basis({static_cast<std::uint32_t>(i)});
  TensorVector y = TensorVector::basis({static_cast<std::uint32_t>(j)});
  for (std::size_t m = 0; m <= h_max; ++m) {
    y = adjoint_apply(v, xi, y);
    if (ideal_membership(v, y)) return -static_cast<int>(m);
  }
  return std::nullopt;
}

std::optional<CartanProfile> cartan_profile(const BraidedVectorSpace& v, std::size_t h_max) {
  const std::size_t t = v.dim();
  CartanProfile p{std::vector<std::vector<int>>(t, std::vector<int>(t, 2)),
                  std::vector<std::vector<std::size_t>>(t, std::vector<std::size_t>(t, 0))};
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) continue;
      auto c = cartan_coefficient(v, i, j, h_max);
      if (!c) return std::nullopt;
      p.matrix[i][j] = *c;
      p.witness[i][j] = static_cast<std::size_t>(1 - *c);
    }
  return p;
}

OracleReport verify_against_oracle(const BraidedVectorSpace& v, std::size_t n_max, const Budget& budget) {
  EngineOptions o;
  o.max_degree = n_max;
  o.budget = budget;
  auto t = hilbert_series(v, o);
  if (t.incomplete) throw BudgetExceeded("engine " + t.incomplete_reason);
  OracleReport r;
  r.engine = t.dims;
  r.engine.resize(n_max + 1, 0);
  r.oracle = symmetrizer_ranks(v, n_max, budget);
  for (std::size_t n = 0; n <= n_max; ++n)
    if (r.engine[n] != r.oracle[n]) {
      r.match = false;
      r.first_mismatch = n;
      break;
    }
  return r;
}

}  // namespace nichols
