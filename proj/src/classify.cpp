#include "nichols/classify.hpp"

#include <algorithm>
#include <numeric>

#include "nichols/nichols.hpp"

namespace nichols {

namespace {

std::string pair_str(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Exponent vector sum_k coef[k] v[k] reduced mod the factors.
std::vector<unsigned> combine(const FiniteAbelianGroup& g, const std::vector<std::vector<unsigned>>& v,
                              const std::vector<long>& coef) {
  std::vector<unsigned> out(g.factors.size(), 0);
  for (std::size_t t = 0; t < g.factors.size(); ++t) {
    long s = 0;
    for (std::size_t k = 0; k < v.size(); ++k) s += coef[k] * static_cast<long>(v[k][t]);
    const long m = g.factors[t];
    out[t] = static_cast<unsigned>(((s % m) + m) % m);
  }
  return out;
}

bool trivial(const std::vector<unsigned>& e) {
  return std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
}

std::vector<std::vector<std::size_t>> components_of(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (a[i][j] != 0 || a[j][i] != 0)) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(members);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CartanDatumCheck validate_cartan_datum(const YDDatumDiagonal& d, const IntMatrix& a) {
  CartanDatumCheck out;
  auto& items = out.report.items;
  const std::size_t n = d.g.size();
  bool shape = d.chi.size() == n && a.size() == n && n > 0;
  for (const auto& row : a) shape &= row.size() == n;
  for (const auto& e : d.g) shape &= e.size() == d.group.factors.size();
  for (const auto& e : d.chi) shape &= e.size() == d.group.factors.size();
  items.push_back({"shape", shape, shape ? "" : "g, chi and a must have matching sizes"});
  if (!shape) return out;

  CheckItem gcm{"cartan matrix", true, ""};
  for (std::size_t i = 0; i < n && gcm.ok; ++i)
    for (std::size_t j = 0; j < n && gcm.ok; ++j)
      if ((i == j && a[i][j] != 2) || (i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)))) {
        gcm.ok = false;
        gcm.detail = "entry " + pair_str(i, j) + " is not that of a generalized Cartan matrix";
      }
  if (gcm.ok && !classical_positive_roots(a)) {
    gcm.ok = false;
    gcm.detail = "not of finite type";
  }
  items.push_back(gcm);

  const CycloMatrix q = d.braiding_matrix();
  CheckItem compat{"compatibility", true, ""};
  for (std::size_t i = 0; i < n && compat.ok; ++i)
    for (std::size_t j = 0; j < n && compat.ok; ++j)
      if (i != j && q[i][j] * q[j][i] != q[i][i].pow(a[i][j])) {
        compat.ok = false;
        compat.detail = "pair " + pair_str(i, j) + ": q_ij q_ji = " + (q[i][j] * q[j][i]).to_string() +
                        " but q_ii^a_ij = " + q[i][i].pow(a[i][j]).to_string();
      }
  items.push_back(compat);

  CheckItem nontrivial{"q_ii != 1", true, ""};
  for (std::size_t i = 0; i < n && nontrivial.ok; ++i)
    if (q[i][i].is_one()) {
      nontrivial.ok = false;
      nontrivial.detail = "q_" + std::to_string(i + 1) + std::to_string(i + 1) + " = 1";
    }
  items.push_back(nontrivial);

  out.components = components_of(a);
  CheckItem constant{"constant N", true, ""};
  for (const auto& comp : out.components) {
    const unsigned nj = *q[comp[0]][comp[0]].order_as_root_of_unity();
    out.n.push_back(nj);
    for (std::size_t i : comp)
      if (constant.ok && *q[i][i].order_as_root_of_unity() != nj) {
        constant.ok = false;
        constant.detail = "ord q_" + std::to_string(i + 1) + std::to_string(i + 1) + " differs from ord q_" +
                          std::to_string(comp[0] + 1) + std::to_string(comp[0] + 1);
      }
  }
  items.push_back(constant);
  return out;
}

Report validate_lifting_params_cartan(const YDDatumDiagonal& d, const IntMatrix& a, const CartanLiftingParams& p) {
  Report rep;
  const auto datum = validate_cartan_datum(d, a);
  rep.items.push_back({"cartan datum", datum.report.ok(), ""});
  for (const auto& item : datum.report.items)
    if (!item.ok) {
      rep.items.back().detail = item.name + ": " + item.detail;
      break;
    }
  if (!datum.report.ok()) return rep;
  const auto& g = d.group;
  const std::size_t n = d.g.size();
  std::vector<std::size_t> comp_of(n);
  for (std::size_t c = 0; c < datum.components.size(); ++c)
    for (std::size_t i : datum.components[c]) comp_of[i] = c;

  CheckItem domain{"lambda domain", true, ""};
  CheckItem lvan{"lambda vanishing", true, ""};
  for (const auto& [key, value] : p.lambda) {
    const auto [i, j] = key;
    if (i >= j || j >= n || comp_of[i] == comp_of[j] || (value != 0 && value != 1)) {
      if (domain.ok) domain.detail = "lambda" + pair_str(i, j) + " needs i < j in different components and a value in {0,1}";
      domain.ok = false;
      continue;
    }
    std::vector<long> ones = {1, 1};
    const bool gg = trivial(combine(g, {d.g[i], d.g[j]}, ones));
    const bool chichi = trivial(combine(g, {d.chi[i], d.chi[j]}, ones));
    if (value != 0 && (gg || !chichi) && lvan.ok) {
      lvan.ok = false;
      lvan.detail = "lambda" + pair_str(i, j) + " = 1 but " + (gg ? "g_i g_j = 1" : "chi_i chi_j != e");
    }
  }
  rep.items.push_back(domain);
  rep.items.push_back(lvan);

  const auto roots = *classical_positive_roots(a);
  CheckItem len{"mu length", p.mu.size() == roots.size(), ""};
  if (!len.ok) len.detail = "expected " + std::to_string(roots.size()) + " values, got " + std::to_string(p.mu.size());
  rep.items.push_back(len);
  CheckItem mvan{"mu vanishing", true, ""};
  for (std::size_t r = 0; r < roots.size() && r < p.mu.size() && mvan.ok; ++r) {
    if (p.mu[r].is_zero()) continue;
    const auto& alpha = roots[r];
    std::size_t i = 0;
    while (alpha[i] == 0) ++i;
    const long nj = datum.n[comp_of[i]];
    std::vector<long> coef(alpha.begin(), alpha.end());
    for (auto& c : coef) c *= nj;
    const bool gpow = trivial(combine(g, d.g, coef));
    const bool chipow = trivial(combine(g, d.chi, coef));
    if (gpow || !chipow) {
      mvan.ok = false;
      std::string s;
      for (std::size_t k = 0; k < alpha.size(); ++k) s += (k ? "," : "") + std::to_string(alpha[k]);
      mvan.detail = "mu at (" + s + ") must vanish: " + (gpow ? "g_alpha^N = 1" : "chi_alpha^N != e");
    }
  }
  rep.items.push_back(mvan);
  return rep;
}

const std::vector<LiftingKind>& all_lifting_kinds() {
  static const std::vector<LiftingKind> kinds = {LiftingKind::O3_2, LiftingKind::O4_2, LiftingKind::X4w,
                                                 LiftingKind::X5_2, LiftingKind::X5_3};
  return kinds;
}

std::string to_string(LiftingKind k) {
  switch (k) {
    case LiftingKind::O3_2: return "O3_2";
    case LiftingKind::O4_2: return "O4_2";
    case LiftingKind::X4w: return "X4w";
    case LiftingKind::X5_2: return "X5_2";
    case LiftingKind::X5_3: return "X5_3";
  }
  return "";
}

LiftingKind parse_lifting_kind(const std::string& s) {
  for (auto k : all_lifting_kinds())
    if (to_string(k) == s) return k;
  throw InputError("unknown lifting kind \"" + s + "\" (expected O3_2, O4_2, X4w, X5_2 or X5_3)");
}

namespace {

PermGroup symmetric_group(unsigned n) {
  std::vector<std::uint32_t> cyc(n);
  for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return PermGroup({Permutation::parse_cycles("(1 2)"), Permutation(cyc)});
}

struct Condition {
  std::size_t lambda;  // 0-based
  std::string text;
  unsigned chi_power;              // nonzero: applies if chi^power != e
  std::vector<std::string> word;   // nonempty: applies if the product of g's is 1
};

std::vector<Condition> conditions(LiftingKind k) {
  switch (k) {
    case LiftingKind::O3_2:
      return {{0, "lambda_1 = 0 if chi^2 != e", 2, {}},
              {1, "lambda_2 = 0 if chi^2 != e", 2, {}},
              {0, "lambda_1 = 0 if g_(1 2)^2 = 1", 0, {"(1 2)", "(1 2)"}},
              {1, "lambda_2 = 0 if g_(1 2) g_(1 3) = 1", 0, {"(1 2)", "(1 3)"}}};
    case LiftingKind::O4_2:
      return {{0, "lambda_1 = 0 if chi^2 != e", 2, {}},
              {1, "lambda_2 = 0 if chi^2 != e", 2, {}},
              {2, "lambda_3 = 0 if chi^2 != e", 2, {}},
              {0, "lambda_1 = 0 if g_(1 2)^2 = 1", 0, {"(1 2)", "(1 2)"}},
              {1, "lambda_2 = 0 if g_(1 2) g_(3 4) = 1", 0, {"(1 2)", "(3 4)"}},
              {2, "lambda_3 = 0 if g_(1 2) g_(1 3) = 1", 0, {"(1 2)", "(1 3)"}}};
    case LiftingKind::X4w:
      return {{0, "lambda_1 = 0 if chi^2 != e", 2, {}},
              {1, "lambda_2 = 0 if chi^2 != e", 2, {}},
              {2, "lambda_3 = 0 if chi^6 != e", 6, {}},
              {0, "lambda_1 = 0 if g_0^2 = 1", 0, {"0", "0"}},
              {1, "lambda_2 = 0 if g_0 g_1 = 1", 0, {"0", "1"}},
              {2, "lambda_3 = 0 if g_0^3 g_1^3 = 1", 0, {"0", "0", "0", "1", "1", "1"}}};
    case LiftingKind::X5_2:
      return {{0, "lambda_1 = 0 if chi^2 != e", 2, {}},
              {1, "lambda_2 = 0 if chi^2 != e", 2, {}},
              {2, "lambda_3 = 0 if chi^4 != e", 4, {}},
              {0, "lambda_1 = 0 if g_0^2 = 1", 0, {"0", "0"}},
              {1, "lambda_2 = 0 if g_0 g_1 = 1", 0, {"0", "1"}},
              {2, "lambda_3 = 0 if g_0^2 g_1 g_2 = 1", 0, {"0", "0", "1", "2"}}};
    case LiftingKind::X5_3:
      return {{0, "lambda_1 = 0 if chi^2 != e", 2, {}},
              {1, "lambda_2 = 0 if chi^2 != e", 2, {}},
              {2, "lambda_3 = 0 if chi^4 != e", 4, {}},
              {0, "lambda_1 = 0 if g_0^2 = 1", 0, {"0", "0"}},
              {1, "lambda_2 = 0 if g_1 g_0 = 1", 0, {"1", "0"}},
              {2, "lambda_3 = 0 if g_0^2 g_1 g_3 = 1", 0, {"0", "0", "1", "3"}}};
  }
  return {};
}

}  // namespace

Rack lifting_rack(LiftingKind k) {
  switch (k) {
    case LiftingKind::O3_2: return conjugacy_class_rack(symmetric_group(3), Permutation::parse_cycles("(1 2)"));
    case LiftingKind::O4_2: return conjugacy_class_rack(symmetric_group(4), Permutation::parse_cycles("(1 2)"));
    case LiftingKind::X4w: return field_affine_rack(4, "w");
    case LiftingKind::X5_2: return field_affine_rack(5, "2");
    case LiftingKind::X5_3: return field_affine_rack(5, "3");
  }
  throw InputError("unknown lifting kind");
}

BraidedVectorSpace lifting_braided_space(LiftingKind k) {
  Rack x = lifting_rack(k);
  auto q = RackCocycle::constant(x, CycloNumber(-1));
  return BraidedVectorSpace::rack_type(std::move(x), std::move(q));
}

unsigned lifting_dimension(LiftingKind k) {
  switch (k) {
    case LiftingKind::O3_2: return 12;
    case LiftingKind::O4_2: return 576;
    case LiftingKind::X4w: return 72;
    case LiftingKind::X5_2: return 1280;
    case LiftingKind::X5_3: return 1280;
  }
  throw InputError("unknown lifting kind");
}

std::size_t lifting_parameter_count(LiftingKind k) { return k == LiftingKind::O3_2 ? 2 : 3; }

YDDatumRack standard_lifting_datum(LiftingKind k) {
  const Rack x = lifting_rack(k);
  const std::size_t n = x.size();
  const std::vector<std::vector<CycloNumber>> q(n, std::vector<CycloNumber>(n, CycloNumber(-1)));
  if (k == LiftingKind::O3_2 || k == LiftingKind::O4_2) {
    const PermGroup s = symmetric_group(k == LiftingKind::O3_2 ? 3 : 4);
    std::vector<CycloNumber> sign;
    for (const auto& h : s.elements()) sign.emplace_back(h.sign());
    return YDDatumRack::conjugation(x, s, q, sign);
  }
  // Points 0..n-1 carry X, points n and n+1 the Z_2 factor.
  const auto a = static_cast<std::uint32_t>(n), b = a + 1;
  std::vector<Permutation> gens;
  for (RackElement i = 0; i < n; ++i) {
    std::vector<std::uint32_t> img(n + 2);
    for (RackElement j = 0; j < n; ++j) img[j] = x.op(i, j);
    img[a] = b;
    img[b] = a;
    gens.emplace_back(img);
  }
  YDDatumRack d;
  d.rack = x;
  d.q = q;
  d.group = PermGroup(gens);
  const auto& els = d.group.elements();
  for (const auto& h : els) {
    std::vector<RackElement> row;
    for (RackElement j = 0; j < n; ++j) row.push_back(h(j));
    d.action.push_back(std::move(row));
  }
  for (const auto& g : gens) d.g.push_back(d.group.index_of(g));
  std::vector<CycloNumber> chi;
  for (const auto& h : els) chi.emplace_back(h(a) == b ? -1 : 1);
  d.chi.assign(n, chi);
  return d;
}

Report validate_lifting_params_rack(LiftingKind k, const YDDatumRack& d, const std::vector<CycloNumber>& lambda) {
  Report rep;
  const Rack ref = lifting_rack(k);
  CheckItem datum{"datum", true, ""};
  std::map<std::string, RackElement> where;
  if (d.rack.size() != ref.size()) {
    datum.ok = false;
    datum.detail = "rack has " + std::to_string(d.rack.size()) + " elements, " + to_string(k) + " has " +
                   std::to_string(ref.size());
  } else {
    for (RackElement i = 0; i < d.rack.size(); ++i) where[d.rack.label(i)] = i;
    for (RackElement i = 0; i < ref.size() && datum.ok; ++i)
      for (RackElement j = 0; j < ref.size() && datum.ok; ++j) {
        auto si = where.find(ref.label(i)), sj = where.find(ref.label(j));
        if (si == where.end() || sj == where.end()) {
          datum.ok = false;
          datum.detail = "rack labels do not match " + to_string(k);
        } else if (d.rack.label(d.rack.op(si->second, sj->second)) != ref.label(ref.op(i, j))) {
          datum.ok = false;
          datum.detail = "rack operation differs from " + to_string(k) + " at (" + ref.label(i) + ", " +
                         ref.label(j) + ")";
        }
      }
    if (datum.ok) {
      for (RackElement i = 0; i < d.rack.size() && datum.ok; ++i)
        for (RackElement j = 0; j < d.rack.size() && datum.ok; ++j)
          if (i < d.q.size() && j < d.q[i].size() && d.q[i][j] != CycloNumber(-1)) {
            datum.ok = false;
            datum.detail = "cocycle is not constant -1";
          }
      const auto yd = validate_yd_rack_datum(d);
      for (const auto& item : yd.items)
        if (datum.ok && !item.ok) {
          datum.ok = false;
          datum.detail = item.name + ": " + item.detail;
        }
    }
  }
  rep.items.push_back(datum);
  if (!datum.ok) return rep;

  CheckItem constant{"constant character", true, ""};
  for (std::size_t i = 1; i < d.chi.size(); ++i)
    if (d.chi[i] != d.chi[0]) {
      constant.ok = false;
      constant.detail = "chi_" + d.rack.label(static_cast<RackElement>(i)) + " differs from chi_" + d.rack.label(0);
      break;
    }
  rep.items.push_back(constant);

  const std::size_t count = lifting_parameter_count(k);
  CheckItem size{"parameter count", lambda.size() == count, ""};
  if (!size.ok) size.detail = "expected " + std::to_string(count) + " values, got " + std::to_string(lambda.size());
  rep.items.push_back(size);
  if (!size.ok || !constant.ok) return rep;

  const auto& els = d.group.elements();
  for (const auto& c : conditions(k)) {
    bool applies = false;
    if (c.chi_power) {
      for (const auto& v : d.chi[0])
        if (!v.pow(c.chi_power).is_one()) applies = true;
    } else {
      Permutation prod;
      for (const auto& label : c.word) prod = prod * els[d.g[where.at(label)]];
      applies = prod.is_identity();
    }
    CheckItem item{c.text, true, ""};
    if (applies && !lambda[c.lambda].is_zero()) {
      item.ok = false;
      item.detail = "lambda_" + std::to_string(c.lambda + 1) + " = " + lambda[c.lambda].to_string() + " is forced to 0";
    }
    rep.items.push_back(item);
  }
  return rep;
}

MultiplierCheck lifting_multiplier_consistency(LiftingKind k, const Budget& budget, unsigned threads) {
  MultiplierCheck out;
  out.multiplier = lifting_dimension(k);
  auto dim = total_dimension(lifting_braided_space(k), budget, threads);
  if (!dim) throw BudgetExceeded("Nichols computation for " + to_string(k) + " did not finish within budget");
  out.engine = *dim;
  out.consistent = out.engine == out.multiplier;
  return out;
}

}  // namespace nichols
