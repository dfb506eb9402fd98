#include "nichols/io.hpp"

#include <fstream>
#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

// Already carries its field path.
class FieldError : public InputError {
public:
  using InputError::InputError;
};

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw FieldError((path.empty() ? std::string("input") : "field " + path) + ": " + msg);
}

const Json& need(const Json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(sub(path, key), "missing");
  return *it;
}

const Json* maybe(const Json& j, const std::string& key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

unsigned positive(const Json& j, const std::string& path) {
  const long v = integer(j, path);
  if (v <= 0) fail(path, "must be positive, got " + std::to_string(v));
  if (v > 1'000'000'000L) fail(path, "too large");
  return static_cast<unsigned>(v);
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<long> integers(const Json& j, const std::string& path) {
  std::vector<long> out;
  for (std::size_t k = 0; k < array(j, path).size(); ++k) out.push_back(integer(j[k], at(path, k)));
  return out;
}

IntMatrix int_matrix(const Json& j, const std::string& path) {
  IntMatrix out;
  for (std::size_t k = 0; k < array(j, path).size(); ++k) out.push_back(integers(j[k], at(path, k)));
  return out;
}

void require_square(const IntMatrix& m, std::size_t n, const std::string& path) {
  if (m.size() != n) fail(path, "expected " + std::to_string(n) + " rows, got " + std::to_string(m.size()));
  for (std::size_t k = 0; k < n; ++k)
    if (m[k].size() != n) fail(at(path, k), "expected " + std::to_string(n) + " entries");
}

mpq_class rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  const std::string s = text(j, path);
  mpq_class q;
  try {
    q = mpq_class(s, 10);
  } catch (const std::invalid_argument&) {
    fail(path, "bad rational \"" + s + "\"");
  }
  if (q.get_den() == 0) fail(path, "zero denominator");
  q.canonicalize();
  return q;
}

std::string big(const Json& j, const std::string& path) {
  const std::string s = text(j, path);
  mpz_class z;
  if (z.set_str(s, 10) != 0) fail(path, "bad integer \"" + s + "\"");
  return s;
}

// Library InputErrors raised while building an object, reported against its field.
template <class F>
auto within(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FieldError&) {
    throw;
  } catch (const InputError& e) {
    fail(path, e.what());
  } catch (const DivisionByZero&) {
    fail(path, "division by zero");
  }
}

Json rational_json(const mpq_class& q) { return q.get_str(); }

Json matrix_json(const FieldMatrix& a) {
  Json out = Json::array();
  for (const auto& row : a) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_json(x));
    out.push_back(r);
  }
  return out;
}

std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
  }
  return "none";
}

SearchStatus parse_status(const Json& j) {
  const std::string s = text(j, "status");
  if (s == "found") return SearchStatus::found;
  if (s == "none") return SearchStatus::none;
  if (s == "budget_exceeded") return SearchStatus::budget_exceeded;
  fail("status", "unknown search status \"" + s + "\"");
}

std::vector<std::vector<IntVector>> root_table(const Json& j, const std::string& path, std::size_t points,
                                               std::size_t rank) {
  std::vector<std::vector<IntVector>> out;
  if (array(j, path).size() != points) fail(path, "expected one root list per point");
  for (std::size_t x = 0; x < points; ++x) {
    out.emplace_back();
    for (std::size_t k = 0; k < array(j[x], at(path, x)).size(); ++k) {
      auto v = integers(j[x][k], at(at(path, x), k));
      if (v.size() != rank) fail(at(at(path, x), k), "root of the wrong length");
      out.back().push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text_in, const std::string& source) {
  try {
    return Json::parse(text_in);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text_in.size(); ++k) {
      if (text_in[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    const auto cut = what.find("syntax error");
    if (cut != std::string::npos) what = what.substr(cut);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path.string());
}

CycloNumber parse_scalar(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return CycloNumber(j.get<long>());
  if (j.is_string()) return CycloNumber(rational(j, path));
  if (!j.is_object()) fail(path, "expected a scalar");
  if (const Json* z = maybe(j, "zeta")) {
    const std::string zp = sub(path, "zeta");
    if (!z->is_array() || z->size() != 2) fail(zp, "expected [N, k]");
    const unsigned n = positive((*z)[0], at(zp, 0));
    const long k = integer((*z)[1], at(zp, 1));
    return CycloNumber::root_of_unity(n, k);
  }
  const unsigned n = positive(need(j, path, "conductor"), sub(path, "conductor"));
  const Json& c = array(need(j, path, "coeffs"), sub(path, "coeffs"));
  std::vector<mpq_class> coeffs;
  for (std::size_t k = 0; k < c.size(); ++k) coeffs.push_back(rational(c[k], at(sub(path, "coeffs"), k)));
  if (coeffs.size() != euler_phi(n))
    fail(sub(path, "coeffs"), "expected phi(" + std::to_string(n) + ") = " + std::to_string(euler_phi(n)) +
                                  " coefficients, got " + std::to_string(coeffs.size()));
  return CycloNumber(n, std::move(coeffs));
}

Json scalar_to_json(const CycloNumber& x) {
  const CycloNumber y = x.normalized();
  Json c = Json::array();
  for (const auto& q : y.coeffs()) c.push_back(rational_json(q));
  return Json{{"conductor", y.conductor()}, {"coeffs", c}};
}

Rack parse_rack(const Json& j, const std::filesystem::path& base_dir, const std::string& path) {
  if (j.is_string()) {
    const auto file = base_dir / j.get<std::string>();
    return parse_rack(read_json_file(file), file.parent_path(), "");
  }
  const std::string kind = text(need(j, path, "kind"), sub(path, "kind"));
  if (kind == "table") {
    const std::string op = sub(path, "op");
    const Json& rows = array(need(j, path, "op"), op);
    const std::size_t n = rows.size();
    if (n == 0) fail(op, "empty table");
    RackTable table;
    for (std::size_t x = 0; x < n; ++x) {
      const auto row = integers(rows[x], at(op, x));
      if (row.size() != n) fail(at(op, x), "expected " + std::to_string(n) + " entries");
      table.emplace_back();
      for (std::size_t y = 0; y < n; ++y) {
        if (row[y] < 0 || row[y] >= static_cast<long>(n))
          fail(at(at(op, x), y), "element out of range 0.." + std::to_string(n - 1));
        table.back().push_back(static_cast<RackElement>(row[y]));
      }
    }
    std::vector<std::string> labels;
    if (const Json* l = maybe(j, "labels")) {
      for (std::size_t k = 0; k < array(*l, sub(path, "labels")).size(); ++k)
        labels.push_back(text((*l)[k], at(sub(path, "labels"), k)));
      if (labels.size() != n) fail(sub(path, "labels"), "expected one label per element");
    }
    return within(op, [&] { return Rack(table, labels); });
  }
  if (kind == "affine") {
    std::vector<unsigned> moduli;
    const std::string mp = sub(path, "modulus");
    const Json& m = array(need(j, path, "modulus"), mp);
    for (std::size_t k = 0; k < m.size(); ++k) moduli.push_back(positive(m[k], at(mp, k)));
    const IntMatrix g = int_matrix(need(j, path, "matrix"), sub(path, "matrix"));
    require_square(g, moduli.size(), sub(path, "matrix"));
    return within(sub(path, "matrix"), [&] { return affine_rack(moduli, g); });
  }
  if (kind == "conjugacy") {
    const std::string gp = sub(path, "group");
    const Json& gens = array(need(j, path, "group"), gp);
    std::vector<Permutation> perms;
    for (std::size_t k = 0; k < gens.size(); ++k)
      perms.push_back(within(at(gp, k), [&] { return Permutation::parse_cycles(text(gens[k], at(gp, k))); }));
    const std::string ep = sub(path, "element");
    const Permutation x = within(ep, [&] { return Permutation::parse_cycles(text(need(j, path, "element"), ep)); });
    return within(ep, [&] { return conjugacy_class_rack(PermGroup(perms), x); });
  }
  if (kind == "field_affine") {
    const unsigned q = positive(need(j, path, "q"), sub(path, "q"));
    const Json& m = need(j, path, "multiplier");
    const std::string mult = m.is_string() ? m.get<std::string>() : std::to_string(integer(m, sub(path, "multiplier")));
    return within(path, [&] { return field_affine_rack(q, mult); });
  }
  if (kind == "simple_affine") {
    const unsigned p = positive(need(j, path, "p"), sub(path, "p"));
    const auto f = integers(need(j, path, "poly"), sub(path, "poly"));
    return within(sub(path, "poly"), [&] { return simple_affine_rack(p, f); });
  }
  if (kind == "abelian") return abelian_rack(positive(need(j, path, "size"), sub(path, "size")));
  fail(sub(path, "kind"), "unknown rack kind \"" + kind + "\"");
}

BraidedVectorSpace parse_braiding(const Json& j, const std::filesystem::path& base_dir) {
  const std::string kind = text(need(j, "", "kind"), "kind");
  std::vector<std::string> labels;
  if (const Json* l = maybe(j, "labels"))
    for (std::size_t k = 0; k < array(*l, "labels").size(); ++k) labels.push_back(text((*l)[k], at("labels", k)));
  if (kind == "diagonal") {
    DiagonalBraiding d;
    if (const Json* q = maybe(j, "q")) {
      for (std::size_t r = 0; r < array(*q, "q").size(); ++r) {
        d.q.emplace_back();
        for (std::size_t c = 0; c < array((*q)[r], at("q", r)).size(); ++c)
          d.q.back().push_back(parse_scalar((*q)[r][c], at(at("q", r), c)));
      }
    } else {
      const unsigned n = positive(need(j, "", "conductor"), "conductor");
      const IntMatrix e = int_matrix(need(j, "", "q_exponents"), "q_exponents");
      if (e.empty()) fail("q_exponents", "empty matrix");
      require_square(e, e.size(), "q_exponents");
      d = DiagonalBraiding::from_exponents(n, e);
    }
    within(maybe(j, "q") ? "q" : "q_exponents", [&] {
      d.validate();
      return 0;
    });
    if (!labels.empty() && labels.size() != d.theta()) fail("labels", "expected one label per basis vector");
    return BraidedVectorSpace::diagonal(std::move(d), labels);
  }
  if (kind == "rack") {
    const Rack x = parse_rack(need(j, "", "rack"), base_dir, "rack");
    const Json& c = need(j, "", "cocycle");
    const std::string ck = text(need(c, "cocycle", "kind"), "cocycle.kind");
    RackCocycle q;
    if (ck == "constant") {
      const CycloNumber v = maybe(c, "value") ? parse_scalar(c["value"], "cocycle.value") : parse_scalar(c, "cocycle");
      if (v.is_zero()) fail("cocycle", "the constant must be nonzero");
      q = RackCocycle::constant(x, v);
    } else if (ck == "table") {
      const Json& e = array(need(c, "cocycle", "entries"), "cocycle.entries");
      if (e.size() != x.size()) fail("cocycle.entries", "expected " + std::to_string(x.size()) + " rows");
      std::vector<std::vector<CycloNumber>> table;
      for (std::size_t r = 0; r < x.size(); ++r) {
        const std::string rp = at("cocycle.entries", r);
        if (array(e[r], rp).size() != x.size()) fail(rp, "expected " + std::to_string(x.size()) + " entries");
        table.emplace_back();
        for (std::size_t s = 0; s < x.size(); ++s) table.back().push_back(parse_scalar(e[r][s], at(rp, s)));
      }
      q = within("cocycle.entries", [&] { return RackCocycle::scalar(x, table); });
    } else if (ck == "transposition_sign") {
      q = within("cocycle", [&] { return RackCocycle::transposition_sign(x); });
    } else {
      fail("cocycle.kind", "unknown cocycle kind \"" + ck + "\"");
    }
    const CocycleCheck check = check_cocycle(x, q);
    if (!check.ok) fail("cocycle", check.message);
    return within("rack", [&] { return BraidedVectorSpace::rack_type(x, q); });
  }
  fail("kind", "unknown braiding kind \"" + kind + "\"");
}

Json canonical_braiding(const BraidedVectorSpace& v) {
  Json terms = Json::array();
  const auto n = static_cast<std::uint32_t>(v.dim());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (const auto& t : v.terms(a, b))
        if (!t.coef.is_zero()) terms.push_back(Json{a, b, t.left, t.right, scalar_to_json(t.coef)});
  return Json{{"dim", v.dim()}, {"terms", terms}};
}

bool is_grs_file(const Json& j) { return j.is_object() && j.contains("points"); }

GRSInput parse_grs(const Json& j) {
  GRSInput out;
  const Json& pts = array(need(j, "", "points"), "points");
  for (std::size_t k = 0; k < pts.size(); ++k) out.basic.points.push_back(text(pts[k], at("points", k)));
  const Json& rho = array(need(j, "", "rho"), "rho");
  for (std::size_t i = 0; i < rho.size(); ++i) {
    out.basic.rho.emplace_back();
    for (long v : integers(rho[i], at("rho", i))) {
      if (v < 0) fail(at("rho", i), "negative point index");
      out.basic.rho.back().push_back(static_cast<std::size_t>(v));
    }
  }
  if (out.basic.points.empty()) fail("points", "no points");
  if (out.basic.rho.empty()) fail("rho", "rank must be positive");
  within("rho", [&] {
    out.basic.validate();
    return 0;
  });
  const std::size_t n = out.basic.size(), r = out.basic.rank();
  const Json& c = array(need(j, "", "cartan"), "cartan");
  if (c.size() != n) fail("cartan", "expected one Cartan matrix per point");
  for (std::size_t x = 0; x < n; ++x) {
    out.cartan.push_back(int_matrix(c[x], at("cartan", x)));
    require_square(out.cartan.back(), r, at("cartan", x));
  }
  if (const Json* roots = maybe(j, "roots")) {
    out.roots = root_table(*roots, "roots", n, r);
  } else if (const Json* pos = maybe(j, "positive_roots")) {
    auto table = root_table(*pos, "positive_roots", n, r);
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t m = table[x].size();
      for (std::size_t k = 0; k < m; ++k) {
        IntVector neg = table[x][k];
        for (auto& v : neg) v = -v;
        table[x].push_back(std::move(neg));
      }
    }
    out.roots = std::move(table);
  }
  return out;
}

SuperDatum parse_super(const Json& j) {
  SuperDatum d;
  if (const Json* f = maybe(j, "field")) d.field = within("field", [&] { return SuperField::parse(text(*f, "field")); });
  const Json& a = array(need(j, "", "A"), "A");
  for (std::size_t r = 0; r < a.size(); ++r) {
    d.a.emplace_back();
    for (std::size_t c = 0; c < array(a[r], at("A", r)).size(); ++c) d.a.back().push_back(rational(a[r][c], at(at("A", r), c)));
  }
  for (long v : integers(need(j, "", "p"), "p")) d.p.push_back(static_cast<int>(v));
  d.c = int_matrix(need(j, "", "C"), "C");
  within("A", [&] {
    d.validate();
    return 0;
  });
  return d;
}

FiniteAbelianGroup parse_group(const Json& j, const std::string& path) {
  FiniteAbelianGroup g;
  for (std::size_t k = 0; k < array(j, path).size(); ++k) g.factors.push_back(positive(j[k], at(path, k)));
  return g;
}

namespace {

std::vector<std::vector<unsigned>> group_elements(const Json& j, const std::string& path, const FiniteAbelianGroup& g) {
  std::vector<std::vector<unsigned>> out;
  for (std::size_t k = 0; k < array(j, path).size(); ++k) {
    const auto v = integers(j[k], at(path, k));
    if (v.size() != g.factors.size()) fail(at(path, k), "expected " + std::to_string(g.factors.size()) + " coordinates");
    out.emplace_back();
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (v[t] < 0 || v[t] >= static_cast<long>(g.factors[t]))
        fail(at(at(path, k), t), "coordinate out of range 0.." + std::to_string(g.factors[t] - 1));
      out.back().push_back(static_cast<unsigned>(v[t]));
    }
  }
  return out;
}

}  // namespace

CartanDatumInput parse_cartan_datum(const Json& j) {
  CartanDatumInput out;
  out.datum.group = parse_group(need(j, "", "group"), "group");
  out.datum.g = group_elements(need(j, "", "g"), "g", out.datum.group);
  out.datum.chi = group_elements(need(j, "", "chi"), "chi", out.datum.group);
  const std::size_t n = out.datum.g.size();
  if (n == 0) fail("g", "rank must be positive");
  if (out.datum.chi.size() != n) fail("chi", "expected " + std::to_string(n) + " characters");
  out.a = int_matrix(need(j, "", "cartan"), "cartan");
  require_square(out.a, n, "cartan");
  if (maybe(j, "lambda") || maybe(j, "mu")) {
    CartanLiftingParams p;
    if (const Json* l = maybe(j, "lambda")) {
      for (std::size_t k = 0; k < array(*l, "lambda").size(); ++k) {
        const std::string lp = at("lambda", k);
        const long i = integer(need((*l)[k], lp, "i"), sub(lp, "i"));
        const long jj = integer(need((*l)[k], lp, "j"), sub(lp, "j"));
        if (i < 1 || jj < 1 || i > static_cast<long>(n) || jj > static_cast<long>(n))
          fail(lp, "indices are 1-based and at most " + std::to_string(n));
        p.lambda[{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1)}] =
            static_cast<int>(integer(need((*l)[k], lp, "value"), sub(lp, "value")));
      }
    }
    if (const Json* m = maybe(j, "mu"))
      for (std::size_t k = 0; k < array(*m, "mu").size(); ++k) p.mu.push_back(parse_scalar((*m)[k], at("mu", k)));
    out.lifting = std::move(p);
  }
  return out;
}

RackLiftingInput parse_rack_lifting(const Json& j) {
  RackLiftingInput out;
  out.kind = within("lifting", [&] { return parse_lifting_kind(text(need(j, "", "lifting"), "lifting")); });
  const Json& d = need(j, "", "datum");
  if (d.is_string()) {
    if (d.get<std::string>() != "standard") fail("datum", "expected \"standard\" or a conjugation datum");
    out.datum = standard_lifting_datum(out.kind);
  } else {
    if (out.kind != LiftingKind::O3_2 && out.kind != LiftingKind::O4_2)
      fail("datum", "conjugation data are supported for O3_2 and O4_2 only");
    const Json& gens = array(need(d, "datum", "group"), "datum.group");
    const Json& ch = array(need(d, "datum", "character"), "datum.character");
    if (ch.size() != gens.size()) fail("datum.character", "expected one value per generator");
    std::vector<Permutation> perms;
    std::vector<CycloNumber> values;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      perms.push_back(within(at("datum.group", k), [&] { return Permutation::parse_cycles(text(gens[k], at("datum.group", k))); }));
      values.push_back(parse_scalar(ch[k], at("datum.character", k)));
    }
    const PermGroup g(perms);
    std::map<Permutation, CycloNumber> chi;
    std::vector<Permutation> queue{Permutation()};
    chi.emplace(Permutation(), CycloNumber(1));
    for (std::size_t at_ = 0; at_ < queue.size(); ++at_) {
      const Permutation h = queue[at_];
      const CycloNumber vh = chi.at(h);
      for (std::size_t k = 0; k < perms.size(); ++k) {
        const Permutation p = perms[k] * h;
        const CycloNumber vp = values[k] * vh;
        auto [it, fresh] = chi.emplace(p, vp);
        if (fresh) {
          queue.push_back(p);
        } else if (it->second != vp) {
          fail("datum.character", "values do not extend to a character of the group");
        }
      }
    }
    std::vector<CycloNumber> on_elements;
    for (const auto& h : g.elements()) on_elements.push_back(chi.at(h));
    const Rack x = lifting_rack(out.kind);
    const std::vector<std::vector<CycloNumber>> q(x.size(), std::vector<CycloNumber>(x.size(), CycloNumber(-1)));
    out.datum = within("datum", [&] { return YDDatumRack::conjugation(x, g, q, on_elements); });
  }
  const Json& l = array(need(j, "", "lambda"), "lambda");
  for (std::size_t k = 0; k < l.size(); ++k) out.lambda.push_back(parse_scalar(l[k], at("lambda", k)));
  return out;
}

HilbertReport HilbertReport::from(const NicholsTruncation& t, std::optional<std::size_t> max_degree, bool relations) {
  HilbertReport r;
  r.theta = t.theta;
  r.dims = t.dims;
  r.completed = t.completed;
  r.incomplete = t.incomplete;
  r.reason = t.incomplete_reason;
  r.warnings = t.warnings;
  r.total = t.total();
  r.max_degree = max_degree;
  r.relations = relations;
  if (relations) {
    r.relation_degrees = t.relation_degrees();
    r.new_relations = t.new_relations;
    r.ideal_dims = t.ideal_dims;
  }
  return r;
}

std::string HilbertReport::headline() const {
  std::string s;
  for (std::size_t n = 0; n < dims.size(); ++n) s += (n ? ", " : "") + std::to_string(dims[n]);
  if (completed) return s + " | total " + total.get_str() + " | complete";
  if (incomplete) return s + " | partial sum " + total.get_str() + " | undecided within budget (" + reason + ")";
  return s + " | partial sum " + total.get_str() + " | truncated at degree " + std::to_string(dims.size() - 1);
}

void to_json(Json& j, const CycloNumber& x) { j = scalar_to_json(x); }
void from_json(const Json& j, CycloNumber& x) { x = parse_scalar(j); }

void to_json(Json& j, const HilbertReport& r) {
  Json ideal = Json::array();
  for (const auto& z : r.ideal_dims) ideal.push_back(z.get_str());
  j = Json{{"theta", r.theta},
           {"dims", r.dims},
           {"completed", r.completed},
           {"incomplete", r.incomplete},
           {"reason", r.reason},
           {"warnings", r.warnings},
           {"total", r.total.get_str()},
           {"max_degree", r.max_degree ? Json(*r.max_degree) : Json(nullptr)},
           {"relations", r.relations},
           {"relation_degrees", r.relation_degrees},
           {"new_relations", r.new_relations},
           {"ideal_dims", ideal}};
}

void from_json(const Json& j, HilbertReport& r) {
  r = {};
  r.theta = need(j, "", "theta").get<std::size_t>();
  r.dims = need(j, "", "dims").get<std::vector<std::size_t>>();
  r.completed = need(j, "", "completed").get<bool>();
  r.incomplete = need(j, "", "incomplete").get<bool>();
  r.reason = text(need(j, "", "reason"), "reason");
  r.warnings = need(j, "", "warnings").get<std::vector<std::string>>();
  r.total = mpz_class(big(need(j, "", "total"), "total"));
  if (!need(j, "", "max_degree").is_null()) r.max_degree = j["max_degree"].get<std::size_t>();
  r.relations = need(j, "", "relations").get<bool>();
  r.relation_degrees = need(j, "", "relation_degrees").get<std::vector<std::size_t>>();
  r.new_relations = need(j, "", "new_relations").get<std::vector<std::size_t>>();
  const Json& ideal = array(need(j, "", "ideal_dims"), "ideal_dims");
  for (std::size_t k = 0; k < ideal.size(); ++k) r.ideal_dims.emplace_back(big(ideal[k], at("ideal_dims", k)));
}

void to_json(Json& j, const CheckItem& r) { j = Json{{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}}; }
void from_json(const Json& j, CheckItem& r) {
  r.name = text(need(j, "", "name"), "name");
  r.ok = need(j, "", "ok").get<bool>();
  r.detail = text(need(j, "", "detail"), "detail");
}

void to_json(Json& j, const Report& r) { j = Json{{"ok", r.ok()}, {"items", r.items}}; }
void from_json(const Json& j, Report& r) { r.items = need(j, "", "items").get<std::vector<CheckItem>>(); }

void to_json(Json& j, const TypeDResult& r) {
  Json w = nullptr;
  if (r.witness)
    w = Json{{"r", r.witness->r},
             {"s", r.witness->s},
             {"subrack", r.witness->subrack},
             {"R", r.witness->parts.r},
             {"S", r.witness->parts.s}};
  j = Json{{"status", status_name(r.status)}, {"candidates_examined", r.candidates_examined}, {"witness", w}};
}

void from_json(const Json& j, TypeDResult& r) {
  r = {};
  r.status = parse_status(need(j, "", "status"));
  r.candidates_examined = need(j, "", "candidates_examined").get<std::uint64_t>();
  const Json& w = need(j, "", "witness");
  if (w.is_null()) return;
  TypeDWitness t;
  t.r = need(w, "witness", "r").get<RackElement>();
  t.s = need(w, "witness", "s").get<RackElement>();
  t.subrack = need(w, "witness", "subrack").get<ElementSet>();
  t.parts.r = need(w, "witness", "R").get<ElementSet>();
  t.parts.s = need(w, "witness", "S").get<ElementSet>();
  r.witness = std::move(t);
}

void to_json(Json& j, const TypeFResult& r) {
  Json w = nullptr;
  if (r.witness) w = Json{{"elements", r.witness->elements}, {"subracks", r.witness->subracks}};
  j = Json{{"status", status_name(r.status)}, {"candidates_examined", r.candidates_examined}, {"witness", w}};
}

void from_json(const Json& j, TypeFResult& r) {
  r = {};
  r.status = parse_status(need(j, "", "status"));
  r.candidates_examined = need(j, "", "candidates_examined").get<std::uint64_t>();
  const Json& w = need(j, "", "witness");
  if (w.is_null()) return;
  TypeFWitness t;
  t.elements = need(w, "witness", "elements").get<std::vector<RackElement>>();
  t.subracks = need(w, "witness", "subracks").get<std::vector<ElementSet>>();
  r.witness = std::move(t);
}

void to_json(Json& j, const BasicDatum& b) { j = Json{{"points", b.points}, {"rho", b.rho}}; }
void from_json(const Json& j, BasicDatum& b) {
  b.points = need(j, "", "points").get<std::vector<std::string>>();
  b.rho = need(j, "", "rho").get<std::vector<std::vector<std::size_t>>>();
}

void to_json(Json& j, const DiagonalWeylResult& r) {
  j = Json{{"status", r.status == DiagonalWeylResult::Status::finite ? "finite" : "undecided"},
           {"reason", r.reason},
           {"conductor", r.conductor},
           {"exponents", r.exponents},
           {"basic", r.basic},
           {"cartan", r.cartan},
           {"roots", r.roots}};
}

void from_json(const Json& j, DiagonalWeylResult& r) {
  r = {};
  const std::string s = text(need(j, "", "status"), "status");
  if (s != "finite" && s != "undecided") fail("status", "expected \"finite\" or \"undecided\"");
  r.status = s == "finite" ? DiagonalWeylResult::Status::finite : DiagonalWeylResult::Status::undecided;
  r.reason = text(need(j, "", "reason"), "reason");
  r.conductor = need(j, "", "conductor").get<unsigned>();
  r.exponents = need(j, "", "exponents").get<std::vector<std::vector<std::vector<long>>>>();
  r.basic = need(j, "", "basic").get<BasicDatum>();
  r.cartan = need(j, "", "cartan").get<std::vector<IntMatrix>>();
  r.roots = need(j, "", "roots").get<std::vector<std::vector<IntVector>>>();
}

void to_json(Json& j, const SuperDatum& d) {
  j = Json{{"field", d.field.to_string()}, {"A", matrix_json(d.a)}, {"p", d.p}, {"C", d.c}};
}
void from_json(const Json& j, SuperDatum& d) { d = parse_super(j); }

void to_json(Json& j, const SuperOrbit& o) {
  j = Json{{"points", o.points}, {"basic", o.basic}, {"cartan", o.cartan}, {"raw_involutive", o.raw_involutive}};
}

void from_json(const Json& j, SuperOrbit& o) {
  o.points = need(j, "", "points").get<std::vector<SuperDatum>>();
  o.basic = need(j, "", "basic").get<BasicDatum>();
  o.cartan = need(j, "", "cartan").get<std::vector<IntMatrix>>();
  o.raw_involutive = need(j, "", "raw_involutive").get<bool>();
}

void to_json(Json& j, const MultiplierCheck& m) {
  j = Json{{"multiplier", m.multiplier}, {"engine", m.engine.get_str()}, {"consistent", m.consistent}};
}

void from_json(const Json& j, MultiplierCheck& m) {
  m.multiplier = need(j, "", "multiplier").get<unsigned>();
  m.engine = mpz_class(big(need(j, "", "engine"), "engine"));
  m.consistent = need(j, "", "consistent").get<bool>();
}

void to_json(Json& j, const CartanDatumCheck& c) {
  j = Json{{"report", c.report}, {"components", c.components}, {"n", c.n}};
}

void from_json(const Json& j, CartanDatumCheck& c) {
  c.report = need(j, "", "report").get<Report>();
  c.components = need(j, "", "components").get<std::vector<std::vector<std::size_t>>>();
  c.n = need(j, "", "n").get<std::vector<unsigned>>();
}

void to_json(Json& j, const YDDatumDiagonal& d) { j = Json{{"group", d.group.factors}, {"g", d.g}, {"chi", d.chi}}; }

void from_json(const Json& j, YDDatumDiagonal& d) {
  d.group.factors = need(j, "", "group").get<std::vector<unsigned>>();
  d.g = need(j, "", "g").get<std::vector<std::vector<unsigned>>>();
  d.chi = need(j, "", "chi").get<std::vector<std::vector<unsigned>>>();
}

}  // namespace nichols
