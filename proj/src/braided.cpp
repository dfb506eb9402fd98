#include "nichols/braided.hpp"

#include <algorithm>
#include <numeric>

#include "nichols/errors.hpp"

namespace nichols {

DiagonalBraiding DiagonalBraiding::from_exponents(unsigned conductor, const std::vector<std::vector<long>>& e) {
  if (conductor == 0) throw InputError("conductor must be positive");
  DiagonalBraiding d;
  for (const auto& row : e) {
    d.q.emplace_back();
    for (long x : row) d.q.back().push_back(CycloNumber::root_of_unity(conductor, x));
  }
  d.validate();
  return d;
}

void DiagonalBraiding::validate() const {
  if (q.empty()) throw InputError("diagonal braiding needs theta >= 1");
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i].size() != q.size()) throw InputError("braiding matrix must be square");
    for (std::size_t j = 0; j < q.size(); ++j)
      if (!q[i][j].order_as_root_of_unity())
        throw InputError("q_" + std::to_string(i + 1) + std::to_string(j + 1) + " is not a root of unity");
  }
}

RackCocycle RackCocycle::constant(const Rack& x, const CycloNumber& v) {
  return scalar(x, std::vector<std::vector<CycloNumber>>(x.size(), std::vector<CycloNumber>(x.size(), v)));
}

RackCocycle RackCocycle::scalar(const Rack& x, const std::vector<std::vector<CycloNumber>>& table) {
  if (table.size() != x.size()) throw InputError("cocycle table has wrong size");
  RackCocycle q;
  ElementSet all(x.size());
  std::iota(all.begin(), all.end(), 0u);
  q.components = {all};
  q.degrees = {1};
  q.values.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (table[i].size() != x.size()) throw InputError("cocycle table has wrong size");
    for (std::size_t j = 0; j < x.size(); ++j) q.values[i].push_back({{table[i][j]}});
  }
  return q;
}

RackCocycle RackCocycle::transposition_sign(const Rack& transpositions) {
  const auto& perms = transpositions.permutations();
  if (perms.size() != transpositions.size()) throw InputError("rack does not come from a permutation group");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> moved;
  for (const auto& p : perms) {
    std::vector<std::uint32_t> pts;
    for (std::uint32_t v = 0; v < p.degree(); ++v)
      if (p(v) != v) pts.push_back(v);
    if (pts.size() != 2) throw InputError("rack elements must be transpositions");
    moved.emplace_back(pts[0], pts[1]);
  }
  std::vector<std::vector<CycloNumber>> table(perms.size(), std::vector<CycloNumber>(perms.size()));
  for (std::size_t s = 0; s < perms.size(); ++s)
    for (std::size_t t = 0; t < perms.size(); ++t) {
      const auto [i, j] = moved[t];
      table[s][t] = perms[s](i) < perms[s](j) ? CycloNumber(1) : CycloNumber(-1);
    }
  return scalar(transpositions, table);
}

std::size_t RackCocycle::component_of(RackElement j) const {
  for (std::size_t k = 0; k < components.size(); ++k)
    if (std::binary_search(components[k].begin(), components[k].end(), j)) return k;
  throw InputError("element " + std::to_string(j) + " is in no component");
}

bool RackCocycle::is_scalar() const {
  return std::all_of(degrees.begin(), degrees.end(), [](unsigned n) { return n == 1; });
}

namespace {

void validate_shape(const Rack& x, const RackCocycle& q) {
  if (q.components.empty() || q.components.size() != q.degrees.size())
    throw InputError("cocycle components and degrees do not match");
  std::vector<int> seen(x.size(), 0);
  for (const auto& comp : q.components) {
    if (!std::is_sorted(comp.begin(), comp.end())) throw InputError("cocycle components must be sorted");
    for (auto e : comp) {
      if (e >= x.size()) throw InputError("component element out of range");
      ++seen[e];
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
    throw InputError("cocycle components must partition the rack");
  if (std::any_of(q.degrees.begin(), q.degrees.end(), [](unsigned n) { return n == 0; }))
    throw InputError("cocycle degrees must be positive");
  if (q.values.size() != x.size()) throw InputError("cocycle values have wrong size");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (q.values[i].size() != x.size()) throw InputError("cocycle values have wrong size");
    for (RackElement j = 0; j < x.size(); ++j) {
      const unsigned n = q.degrees[q.component_of(j)];
      const auto& m = q.values[i][j];
      if (m.size() != n || std::any_of(m.begin(), m.end(), [&](const auto& r) { return r.size() != n; }))
        throw InputError("cocycle value has wrong degree");
    }
  }
}

std::string instance_string(std::initializer_list<RackElement> xs) {
  std::string s = "(";
  for (auto x : xs) s += (s.size() > 1 ? ", " : "") + std::to_string(x);
  return s + ")";
}

}  // namespace

CocycleCheck check_cocycle(const Rack& x, const RackCocycle& q) {
  try {
    validate_shape(x, q);
  } catch (const InputError& e) {
    return {false, e.what(), {}};
  }
  for (std::size_t k = 0; k < q.components.size(); ++k)
    for (RackElement l = 0; l < x.size(); ++l)
      for (auto h : q.components[k])
        if (q.component_of(x.op(l, h)) != k)
          return {false, "decomposition condition X_l |> X_k = X_k fails", {l, h}};
  for (RackElement i = 0; i < x.size(); ++i)
    for (RackElement j = 0; j < x.size(); ++j)
      if (determinant(q.values[i][j]).is_zero())
        return {false, "cocycle value is not invertible at " + instance_string({i, j}), {i, j}};
  for (RackElement i = 0; i < x.size(); ++i)
    for (RackElement j = 0; j < x.size(); ++j)
      for (RackElement h = 0; h < x.size(); ++h) {
        const auto lhs = multiply(q.values[i][x.op(j, h)], q.values[j][h]);
        const auto rhs = multiply(q.values[x.op(i, j)][x.op(i, h)], q.values[i][h]);
        if (lhs != rhs) return {false, "cocycle identity fails at " + instance_string({i, j, h}), {i, j, h}};
      }
  return {};
}

BraidedVectorSpace BraidedVectorSpace::diagonal(DiagonalBraiding d, std::vector<std::string> labels) {
  d.validate();
  BraidedVectorSpace v;
  v.kind_ = Kind::diagonal;
  v.dim_ = d.theta();
  if (labels.empty())
    for (std::size_t i = 0; i < v.dim_; ++i) labels.push_back("x" + std::to_string(i + 1));
  if (labels.size() != v.dim_) throw InputError("label count does not match dimension");
  v.labels_ = std::move(labels);
  v.table_.resize(v.dim_ * v.dim_);
  for (std::uint32_t a = 0; a < v.dim_; ++a)
    for (std::uint32_t b = 0; b < v.dim_; ++b) v.table_[a * v.dim_ + b].push_back({b, a, d.q[a][b]});
  v.inverse_table_.resize(v.dim_ * v.dim_);
  for (std::uint32_t a = 0; a < v.dim_; ++a)
    for (std::uint32_t b = 0; b < v.dim_; ++b) v.inverse_table_[b * v.dim_ + a].push_back({a, b, d.q[a][b].inv()});
  v.diag_ = std::move(d);
  return v;
}

BraidedVectorSpace BraidedVectorSpace::rack_type(Rack x, RackCocycle q) {
  validate_shape(x, q);
  BraidedVectorSpace v;
  v.kind_ = Kind::rack;
  std::vector<std::uint32_t> offset(x.size());
  for (RackElement i = 0; i < x.size(); ++i) {
    offset[i] = static_cast<std::uint32_t>(v.element_of_.size());
    const unsigned n = q.degrees[q.component_of(i)];
    for (unsigned a = 0; a < n; ++a) {
      v.element_of_.push_back(i);
      v.labels_.push_back(n == 1 ? x.label(i) : x.label(i) + "#" + std::to_string(a));
    }
  }
  v.dim_ = v.element_of_.size();
  v.table_.resize(v.dim_ * v.dim_);
  // c(x_i v (x) x_j w) = x_{i|>j} q_k(i,j)(w) (x) x_i v
  for (std::uint32_t s = 0; s < v.dim_; ++s)
    for (std::uint32_t t = 0; t < v.dim_; ++t) {
      const RackElement i = v.element_of_[s], j = v.element_of_[t];
      const std::uint32_t b = t - offset[j];
      const auto& m = q.values[i][j];
      const RackElement ij = x.op(i, j);
      auto& out = v.table_[s * v.dim_ + t];
      for (std::uint32_t c = 0; c < m.size(); ++c)
        if (!m[c][b].is_zero()) out.push_back({offset[ij] + c, s, m[c][b]});
    }
  // c^-1(x_k u (x) x_i v) = x_i v (x) x_j q(i,j)^-1(u) with k = i |> j
  v.inverse_table_.resize(v.dim_ * v.dim_);
  for (RackElement i = 0; i < x.size(); ++i)
    for (RackElement j = 0; j < x.size(); ++j) {
      const RackElement k = x.op(i, j);
      CycloMatrix inv;
      try {
        inv = inverse(q.values[i][j]);
      } catch (const DivisionByZero&) {
        throw InputError("cocycle value is not invertible");
      }
      const unsigned ni = q.degrees[q.component_of(i)], nj = static_cast<unsigned>(inv.size());
      for (unsigned u = 0; u < nj; ++u)
        for (unsigned a = 0; a < ni; ++a) {
          auto& out = v.inverse_table_[(offset[k] + u) * v.dim_ + offset[i] + a];
          for (unsigned w = 0; w < nj; ++w)
            if (!inv[w][u].is_zero()) out.push_back({offset[i] + a, offset[j] + w, inv[w][u]});
        }
    }
  v.rack_ = std::move(x);
  v.cocycle_ = std::move(q);
  return v;
}

const std::vector<BraidTerm>& BraidedVectorSpace::braiding(std::uint32_t a, std::uint32_t b) const {
  if (a >= dim_ || b >= dim_) throw InputError("basis index out of range");
  return table_[a * dim_ + b];
}

CycloMatrix BraidedVectorSpace::braiding_matrix() const {
  CycloMatrix m = zero_matrix(dim_ * dim_, dim_ * dim_);
  for (std::uint32_t a = 0; a < dim_; ++a)
    for (std::uint32_t b = 0; b < dim_; ++b)
      for (const auto& t : terms(a, b)) m[t.left * dim_ + t.right][a * dim_ + b] += t.coef;
  return m;
}

std::vector<BraidTerm> braiding_apply(const BraidedVectorSpace& v, std::uint32_t a, std::uint32_t b) {
  return v.braiding(a, b);
}

namespace {

using Triple = std::map<std::vector<std::uint32_t>, CycloNumber>;

Triple apply_at(const BraidedVectorSpace& v, const Triple& in, std::size_t pos) {
  Triple out;
  for (const auto& [w, coef] : in)
    for (const auto& t : v.terms(w[pos], w[pos + 1])) {
      auto u = w;
      u[pos] = t.left;
      u[pos + 1] = t.right;
      auto& slot = out[u];
      slot.add_mul(coef, t.coef);
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

BraidCheck check_braid_equation(const BraidedVectorSpace& v) {
  const auto n = static_cast<std::uint32_t>(v.dim());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c) {
        Triple start{{{a, b, c}, CycloNumber(1)}};
        auto lhs = apply_at(v, apply_at(v, apply_at(v, start, 0), 1), 0);
        auto rhs = apply_at(v, apply_at(v, apply_at(v, start, 1), 0), 1);
        if (lhs != rhs) return {false, {a, b, c}};
      }
  return {};
}

Grading::Grading(const BraidedVectorSpace& v) : diagonal_(v.kind() == BraidedVectorSpace::Kind::diagonal), dim_(v.dim()) {
  if (!diagonal_) {
    const Rack& x = v.rack();
    for (std::uint32_t a = 0; a < dim_; ++a) {
      std::vector<std::uint32_t> perm(x.size());
      for (RackElement y = 0; y < x.size(); ++y) perm[y] = x.op(v.element_of(a), y);
      letter_perm_.push_back(std::move(perm));
    }
    std::vector<std::uint32_t> id(x.size());
    std::iota(id.begin(), id.end(), 0u);
    intern(std::move(id));
  } else {
    intern(std::vector<std::uint32_t>(dim_, 0));
  }
}

std::uint32_t Grading::intern(std::vector<std::uint32_t> key) {
  auto [it, inserted] = index_.emplace(key, static_cast<std::uint32_t>(keys_.size()));
  if (inserted) {
    keys_.push_back(std::move(key));
    next_.emplace_back(dim_, -1);
  }
  return it->second;
}

std::uint32_t Grading::step(std::uint32_t grade, std::uint32_t letter) {
  if (next_[grade][letter] >= 0) return static_cast<std::uint32_t>(next_[grade][letter]);
  std::vector<std::uint32_t> key = keys_[grade];
  if (diagonal_) {
    ++key[letter];
  } else {
    const auto& p = letter_perm_[letter];
    std::vector<std::uint32_t> composed(key.size());
    for (std::size_t y = 0; y < key.size(); ++y) composed[y] = key[p[y]];
    key = std::move(composed);
  }
  const std::uint32_t id = intern(std::move(key));
  next_[grade][letter] = id;
  return id;
}

std::uint32_t Grading::of_word(const std::vector<std::uint32_t>& word) {
  std::uint32_t g = unit;
  for (auto a : word) g = step(g, a);
  return g;
}

std::uint64_t FiniteAbelianGroup::order() const {
  std::uint64_t n = 1;
  for (auto m : factors) n *= m;
  return n;
}

unsigned FiniteAbelianGroup::exponent() const {
  unsigned e = 1;
  for (auto m : factors) e = std::lcm(e, m);
  return e;
}

std::vector<unsigned> FiniteAbelianGroup::element(std::uint64_t index) const {
  std::vector<unsigned> v(factors.size());
  for (std::size_t t = 0; t < factors.size(); ++t) {
    v[t] = static_cast<unsigned>(index % factors[t]);
    index /= factors[t];
  }
  return v;
}

unsigned FiniteAbelianGroup::pairing(const std::vector<unsigned>& chi, const std::vector<unsigned>& g) const {
  const unsigned e = exponent();
  std::uint64_t acc = 0;
  for (std::size_t t = 0; t < factors.size(); ++t)
    acc += static_cast<std::uint64_t>(chi[t]) * g[t] % factors[t] * (e / factors[t]);
  return static_cast<unsigned>(acc % e);
}

CycloNumber FiniteAbelianGroup::character_value(const std::vector<unsigned>& chi, const std::vector<unsigned>& g) const {
  return CycloNumber::root_of_unity(exponent(), pairing(chi, g));
}

CycloMatrix YDDatumDiagonal::braiding_matrix() const {
  CycloMatrix m;
  for (std::size_t i = 0; i < g.size(); ++i) {
    m.emplace_back();
    for (std::size_t j = 0; j < chi.size(); ++j) m.back().push_back(group.character_value(chi[j], g[i]));
  }
  return m;
}

std::vector<YDDatumDiagonal> realize_diagonal_over_group(const CycloMatrix& q, const FiniteAbelianGroup& group,
                                                         std::uint64_t cap) {
  const std::size_t theta = q.size();
  for (auto m : group.factors)
    if (m == 0) throw InputError("invariant factors must be positive");
  const std::uint64_t order = group.order();
  long double candidates = 1;
  for (std::size_t i = 0; i < 2 * theta; ++i) candidates *= static_cast<long double>(order);
  if (candidates > static_cast<long double>(cap))
    throw BudgetExceeded("realization search space exceeds cap");
  const unsigned e = group.exponent();
  // Exponent of each q_ij as a power of zeta_e, or no solution at all.
  std::vector<std::vector<long>> target(theta, std::vector<long>(theta, -1));
  for (std::size_t i = 0; i < theta; ++i) {
    if (q[i].size() != theta) throw InputError("braiding matrix must be square");
    for (std::size_t j = 0; j < theta; ++j)
      for (unsigned k = 0; k < e; ++k)
        if (CycloNumber::root_of_unity(e, k) == q[i][j]) {
          target[i][j] = k;
          break;
        }
  }
  std::vector<YDDatumDiagonal> out;
  for (const auto& row : target)
    for (long t : row)
      if (t < 0) return out;
  std::vector<std::vector<unsigned>> elems(order);
  for (std::uint64_t k = 0; k < order; ++k) elems[k] = group.element(k);
  std::vector<std::uint64_t> gi(theta, 0);
  for (;;) {
    // For fixed (g_i), each chi_j is constrained independently.
    std::vector<std::vector<std::uint64_t>> chis(theta);
    bool any = true;
    for (std::size_t j = 0; j < theta && any; ++j) {
      for (std::uint64_t c = 0; c < order; ++c) {
        bool ok = true;
        for (std::size_t i = 0; i < theta && ok; ++i)
          ok = group.pairing(elems[c], elems[gi[i]]) == static_cast<unsigned>(target[i][j]);
        if (ok) chis[j].push_back(c);
      }
      any = !chis[j].empty();
    }
    if (any) {
      std::vector<std::size_t> pick(theta, 0);
      for (;;) {
        YDDatumDiagonal d;
        d.group = group;
        for (std::size_t i = 0; i < theta; ++i) d.g.push_back(elems[gi[i]]);
        for (std::size_t j = 0; j < theta; ++j) d.chi.push_back(elems[chis[j][pick[j]]]);
        out.push_back(std::move(d));
        std::size_t p = 0;
        while (p < theta && ++pick[p] == chis[p].size()) pick[p++] = 0;
        if (p == theta) break;
      }
    }
    std::size_t p = 0;
    while (p < theta && ++gi[p] == order) gi[p++] = 0;
    if (p == theta) break;
  }
  return out;
}

YDDatumRack YDDatumRack::conjugation(const Rack& x, const PermGroup& group,
                                     const std::vector<std::vector<CycloNumber>>& q,
                                     const std::vector<CycloNumber>& character) {
  const auto& perms = x.permutations();
  if (perms.size() != x.size()) throw InputError("rack does not come from a permutation group");
  const auto& els = group.elements();
  if (character.size() != els.size()) throw InputError("character must be given on every group element");
  YDDatumRack d;
  d.rack = x;
  d.q = q;
  d.group = group;
  std::map<Permutation, RackElement> where;
  for (RackElement i = 0; i < x.size(); ++i) where[perms[i]] = i;
  for (const auto& h : els) {
    std::vector<RackElement> row;
    for (const auto& p : perms) {
      auto it = where.find(p.conjugate_by(h));
      if (it == where.end()) throw InputError("group does not preserve the conjugacy class");
      row.push_back(it->second);
    }
    d.action.push_back(std::move(row));
  }
  for (const auto& p : perms) d.g.push_back(group.index_of(p));
  d.chi.assign(x.size(), character);
  return d;
}

bool Report::ok() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.ok; });
}

const CheckItem* Report::find(const std::string& name) const {
  for (const auto& c : items)
    if (c.name == name) return &c;
  return nullptr;
}

Report validate_yd_rack_datum(const YDDatumRack& d) {
  Report rep;
  const auto& els = d.group.elements();
  const std::size_t n = d.rack.size(), m = els.size();
  std::map<Permutation, std::size_t> index;
  for (std::size_t h = 0; h < m; ++h) index[els[h]] = h;
  auto mul = [&](std::size_t a, std::size_t b) { return index.at(els[a] * els[b]); };

  CheckItem shape{"shape", true, ""};
  if (d.action.size() != m || d.g.size() != n || d.chi.size() != n || d.q.size() != n) {
    shape = {"shape", false, "datum components have inconsistent sizes"};
  } else {
    for (std::size_t h = 0; h < m && shape.ok; ++h)
      if (d.action[h].size() != n) shape = {"shape", false, "action row has wrong size"};
    for (std::size_t i = 0; i < n && shape.ok; ++i) {
      if (d.g[i] >= m) shape = {"shape", false, "g_i is not a group element"};
      if (d.chi[i].size() != m || d.q[i].size() != n) shape = {"shape", false, "chi or q has wrong size"};
    }
  }
  rep.items.push_back(shape);
  if (!shape.ok) return rep;

  CheckItem action{"action", true, ""};
  for (std::size_t h = 0; h < m && action.ok; ++h) {
    std::vector<bool> hit(n, false);
    for (auto v : d.action[h]) {
      if (v >= n || hit[v]) {
        action = {"action", false, "element " + els[h].to_cycle_string() + " does not act bijectively"};
        break;
      }
      hit[v] = true;
    }
  }
  for (RackElement j = 0; j < n && action.ok; ++j)
    if (d.action[0][j] != j) action = {"action", false, "identity acts nontrivially"};
  for (std::size_t h = 0; h < m && action.ok; ++h)
    for (std::size_t t = 0; t < m && action.ok; ++t)
      for (RackElement j = 0; j < n; ++j)
        if (d.action[mul(h, t)][j] != d.action[h][d.action[t][j]]) {
          action = {"action", false, "(ht).j != h.(t.j) at h=" + els[h].to_cycle_string() +
                                         ", t=" + els[t].to_cycle_string()};
          break;
        }
  rep.items.push_back(action);

  CheckItem equiv{"equivariance", true, ""};
  for (std::size_t h = 0; h < m && equiv.ok; ++h)
    for (RackElement i = 0; i < n; ++i) {
      const auto lhs = els[d.g[d.action[h][i]]];
      const auto rhs = els[d.g[i]].conjugate_by(els[h]);
      if (lhs != rhs) {
        equiv = {"equivariance", false, "g(h.i) != h g(i) h^-1 at h=" + els[h].to_cycle_string() +
                                            ", i=" + d.rack.label(i)};
        break;
      }
    }
  rep.items.push_back(equiv);

  CheckItem compat{"rack compatibility", true, ""};
  for (RackElement i = 0; i < n && compat.ok; ++i)
    for (RackElement j = 0; j < n; ++j)
      if (d.action[d.g[i]][j] != d.rack.op(i, j)) {
        compat = {"rack compatibility", false, "g_i . j != i |> j at (" + d.rack.label(i) + ", " + d.rack.label(j) + ")"};
        break;
      }
  rep.items.push_back(compat);

  CheckItem cocycle{"1-cocycle", true, ""};
  for (RackElement i = 0; i < n && cocycle.ok; ++i)
    for (std::size_t h = 0; h < m && cocycle.ok; ++h)
      for (std::size_t t = 0; t < m; ++t)
        if (d.chi[i][mul(h, t)] != d.chi[i][t] * d.chi[d.action[t][i]][h]) {
          cocycle = {"1-cocycle", false, "chi_i(ht) != chi_i(t) chi_{t.i}(h) at i=" + d.rack.label(i)};
          break;
        }
  rep.items.push_back(cocycle);

  CheckItem braid{"braiding compatibility", true, ""};
  for (RackElement i = 0; i < n && braid.ok; ++i)
    for (RackElement j = 0; j < n; ++j)
      if (d.chi[i][d.g[j]] != d.q[i][j]) {
        braid = {"braiding compatibility", false,
                 "chi_i(g_j) != q_ij at (" + d.rack.label(i) + ", " + d.rack.label(j) + ")"};
        break;
      }
  rep.items.push_back(braid);
  return rep;
}

}  // namespace nichols
