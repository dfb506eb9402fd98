#include "nichols/cli.hpp"

#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "nichols/cache.hpp"
#include "nichols/classify.hpp"
#include "nichols/errors.hpp"
#include "nichols/groupoid.hpp"
#include "nichols/io.hpp"
#include "nichols/nichols.hpp"
#include "nichols/racks.hpp"
#include "nichols/superreflect.hpp"

namespace nichols {

namespace {

struct Common {
  unsigned threads = 1;
  bool json = false;
  bool no_cache = false;
  double budget_seconds = 600.0;
  std::uint64_t budget_entries = 50'000'000;

  Budget budget() const { return {budget_seconds, budget_entries}; }
};

std::string vec(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

template <class T>
std::string list(const std::vector<T>& v, long shift = 0) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(static_cast<long>(v[k]) + shift);
  return s;
}

std::string parity(const std::vector<int>& p) { return vec(std::vector<long>(p.begin(), p.end())); }

std::string mat(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < m[r].size(); ++c) s += (c ? "," : "") + std::to_string(m[r][c]);
    s += "]";
  }
  return s + "]";
}

std::string field_mat(const FieldMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < m[r].size(); ++c) s += (c ? "," : "") + m[r][c].get_str();
    s += "]";
  }
  return s + "]";
}

std::string labels(const Rack& x, const ElementSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", " : "") + x.label(s[k]);
  return out + "}";
}

void print_report(std::ostream& out, const Report& r) {
  for (const auto& it : r.items)
    out << (it.ok ? "PASS " : "FAIL ") << it.name << (it.detail.empty() ? "" : ": " + it.detail) << "\n";
}

void emit_json(std::ostream& out, const std::string& command, const Json& result) {
  out << Json{{"command", command}, {"result", result}}.dump(2) << "\n";
}

std::filesystem::path parent_of(const std::string& file) { return std::filesystem::path(file).parent_path(); }

std::optional<ResultCache> open_cache(const Common& c) {
  if (c.no_cache) return std::nullopt;
  return ResultCache::from_environment();
}

HilbertReport hilbert_cached(const BraidedVectorSpace& v, const Common& c, std::optional<std::size_t> max_degree,
                             bool relations, std::ostream& err) {
  auto cache = open_cache(c);
  std::string key;
  if (cache) {
    const Json options{{"max_degree", max_degree ? Json(*max_degree) : Json(nullptr)}, {"relations", relations}};
    key = cache->key("hilbert", canonical_braiding(v), options);
    if (auto hit = cache->get(key)) {
      try {
        HilbertReport r = hit->get<HilbertReport>();
        err << "cache: hit " << key.substr(0, 16) << "\n";
        return r;
      } catch (const std::exception&) {
        std::error_code ec;
        std::filesystem::remove(cache->entry_path(key), ec);
      }
    }
    if (cache->discarded()) err << "cache: discarded a corrupt entry\n";
  }
  EngineOptions opt;
  opt.max_degree = max_degree;
  opt.budget = c.budget();
  opt.relations = relations;
  opt.threads = c.threads;
  HilbertReport r = HilbertReport::from(hilbert_series(v, opt), max_degree, relations);
  if (cache && !r.incomplete) {
    cache->put(key, Json(r));
    err << "cache: stored " << key.substr(0, 16) << "\n";
  }
  return r;
}

int cmd_hilbert(const Common& c, const std::string& file, bool until_zero, std::optional<std::size_t> max_degree,
                bool relations, std::ostream& out, std::ostream& err) {
  if (until_zero) max_degree.reset();
  const BraidedVectorSpace v = parse_braiding(read_json_file(file), parent_of(file));
  const HilbertReport r = hilbert_cached(v, c, max_degree, relations, err);
  if (c.json) {
    emit_json(out, "hilbert", r);
  } else {
    out << r.headline() << "\n";
    if (r.relations) {
      out << "relation degrees: " << (r.relation_degrees.empty() ? "none" : list(r.relation_degrees)) << "\n";
      out << "new relations per degree: " << list(r.new_relations) << "\n";
    }
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  }
  return r.incomplete ? exit_undecided : exit_ok;
}

Rack load_rack(const std::string& file) { return parse_rack(read_json_file(file), parent_of(file)); }

int cmd_rack(const Common& c, const std::string& file, const std::string& action, const std::string& other,
             std::size_t cap, std::ostream& out) {
  if (action == "check") {
    const Json j = read_json_file(file);
    if (j.is_object() && j.value("kind", "") == "table" && j.contains("op")) {
      RackTable t;
      try {
        t = j["op"].get<RackTable>();
      } catch (const Json::exception&) {
        throw InputError("field op: expected a table of element indices");
      }
      const RackCheck rc = is_rack(t);
      if (!rc.ok) {
        if (c.json) {
          emit_json(out, "rack check", Json{{"is_rack", false}, {"message", rc.message}, {"instance", rc.instance}});
        } else {
          out << "rack: no\nviolation: " << rc.message << " at " << list(rc.instance) << "\n";
        }
        return exit_input;
      }
    }
    const Rack x = parse_rack(j, parent_of(file));
    const bool abelian = x.is_abelian();
    if (c.json) {
      emit_json(out, "rack check", Json{{"is_rack", true}, {"size", x.size()}, {"abelian", abelian}});
    } else {
      out << "rack: yes\nsize: " << x.size() << "\nabelian: " << (abelian ? "yes" : "no") << "\n";
    }
    return exit_ok;
  }
  const Rack x = load_rack(file);
  if (action == "typeD") {
    const TypeDResult r = is_type_D(x, c.budget());
    if (c.json) {
      emit_json(out, "rack typeD", r);
    } else if (r.status == SearchStatus::found) {
      const auto& w = *r.witness;
      out << "type D: found\n"
          << "r = " << x.label(w.r) << "\ns = " << x.label(w.s) << "\nY = " << labels(x, w.subrack)
          << "\nR = " << labels(x, w.parts.r) << "\nS = " << labels(x, w.parts.s)
          << "\nverified: " << (verify_type_D(x, w) ? "yes" : "no") << "\n";
    } else {
      out << "type D: " << (r.status == SearchStatus::none ? "none (restricted search)" : "undecided within budget")
          << "\n";
    }
    if (!c.json) out << "candidates examined: " << r.candidates_examined << "\n";
    return r.status == SearchStatus::budget_exceeded ? exit_undecided : exit_ok;
  }
  if (action == "typeF") {
    const TypeFResult r = is_type_F(x, c.budget());
    if (c.json) {
      emit_json(out, "rack typeF", r);
    } else if (r.status == SearchStatus::found) {
      const auto& w = *r.witness;
      out << "type F: found\n";
      for (std::size_t a = 0; a < w.elements.size(); ++a)
        out << "r_" << a + 1 << " = " << x.label(w.elements[a]) << "  R_" << a + 1 << " = " << labels(x, w.subracks[a])
            << "\n";
      out << "verified: " << (verify_type_F(x, w) ? "yes" : "no") << "\n";
    } else {
      out << "type F: " << (r.status == SearchStatus::none ? "none (restricted search)" : "undecided within budget")
          << "\n";
    }
    if (!c.json) out << "candidates examined: " << r.candidates_examined << "\n";
    return r.status == SearchStatus::budget_exceeded ? exit_undecided : exit_ok;
  }
  if (action == "simple") {
    const bool s = is_simple(x, cap);
    if (c.json) {
      emit_json(out, "rack simple", Json{{"simple", s}});
    } else {
      out << "simple: " << (s ? "yes" : "no") << "\n";
    }
    return exit_ok;
  }
  if (action == "iso") {
    if (other.empty()) throw InputError("iso needs a second rack file");
    const bool iso = rack_isomorphic(x, load_rack(other), cap);
    if (c.json) {
      emit_json(out, "rack iso", Json{{"isomorphic", iso}});
    } else {
      out << "isomorphic: " << (iso ? "true" : "false") << "\n";
    }
    return exit_ok;
  }
  throw InputError("unknown rack action \"" + action + "\"");
}

struct WeylOptions {
  std::size_t h_max = 64;
  std::size_t max_points = 2000;
  bool skip_hilbert = false;
};

void print_grs(std::ostream& out, const BasicDatum& basic, const std::vector<IntMatrix>& cartan,
               const std::vector<std::vector<IntVector>>& roots) {
  out << "points: " << basic.size() << "\nrank: " << basic.rank() << "\n";
  for (std::size_t x = 0; x < basic.size(); ++x) {
    out << basic.points[x] << ":\n  cartan " << mat(cartan[x]) << "\n  adjacency";
    for (std::size_t i = 0; i < basic.rank(); ++i)
      out << " rho_" << i + 1 << "->" << basic.points[basic.rho[i][x]];
    const auto pos = positive_part(roots[x]);
    out << "\n  positive roots (" << pos.size() << "):";
    for (const auto& b : pos) out << " " << vec(b);
    out << "\n";
  }
}

int cmd_weyl(const Common& c, const std::string& file, const std::string& action, const WeylOptions& w,
             std::ostream& out, std::ostream& err) {
  if (action != "roots" && action != "check" && action != "dim") throw InputError("unknown weyl action \"" + action + "\"");
  const Json j = read_json_file(file);
  GRSDatum grs;
  std::optional<DiagonalWeylResult> diag;
  std::optional<BraidedVectorSpace> v;
  if (is_grs_file(j)) {
    if (action == "dim") throw InputError("weyl dim needs a diagonal braiding file");
    GRSInput in = parse_grs(j);
    grs.basic = in.basic;
    grs.cartan = in.cartan;
    if (in.roots) {
      grs.roots = *in.roots;
    } else {
      const RootClosure rc = real_root_closure(in.basic, in.cartan);
      if (!rc.finite) {
        if (c.json) {
          emit_json(out, "weyl " + action, Json{{"status", "undecided"}, {"reason", rc.reason}});
        } else {
          out << "real roots: undecided within caps (" << rc.reason << ")\n";
        }
        return exit_undecided;
      }
      grs.roots = rc.roots;
    }
  } else {
    v = parse_braiding(j, parent_of(file));
    if (v->kind() != BraidedVectorSpace::Kind::diagonal) throw InputError("field kind: weyl needs a diagonal braiding");
    DiagonalWeylCaps caps;
    caps.h_max = w.h_max;
    caps.max_points = w.max_points;
    diag = weyl_groupoid_of_diagonal(v->diagonal_data(), caps);
    if (diag->status != DiagonalWeylResult::Status::finite) {
      if (c.json) {
        emit_json(out, "weyl " + action, *diag);
      } else {
        out << "Weyl groupoid: undecided within caps (" << diag->reason << ")\n";
      }
      return exit_undecided;
    }
    grs = diag->grs();
  }

  if (action == "roots") {
    if (c.json) {
      emit_json(out, "weyl roots", diag ? Json(*diag) : Json{{"basic", grs.basic}, {"cartan", grs.cartan}, {"roots", grs.roots}});
    } else {
      if (diag) out << "twist classes mod " << diag->conductor << "\n";
      print_grs(out, grs.basic, grs.cartan, grs.roots);
    }
    return exit_ok;
  }

  if (action == "check") {
    Report rep = check_grs_axioms(grs);
    if (rep.ok()) {
      const WeylGroupoid wg = generate_weyl_groupoid(grs.basic, grs.cartan);
      std::vector<IntMatrix> m;
      for (const auto& roots : grs.roots) m.push_back(coxeter_matrix_from_roots(roots, grs.basic.rank()));
      const Report cox = coxeter_relations_check(wg, m);
      rep.items.insert(rep.items.end(), cox.items.begin(), cox.items.end());
      if (!c.json)
        for (std::size_t x = 0; x < m.size(); ++x) out << "coxeter " << grs.basic.points[x] << " " << mat(m[x]) << "\n";
      if (!c.json) out << "morphisms: " << wg.morphisms.size() << "\n";
    }
    if (c.json) {
      emit_json(out, "weyl check", rep);
    } else {
      print_report(out, rep);
      out << (rep.ok() ? "generalized root system: ok" : "generalized root system: axioms fail") << "\n";
    }
    return rep.ok() ? exit_ok : exit_input;
  }

  const auto pos = positive_part(grs.roots[0]);
  const auto roots_dim = dimension_from_roots(v->diagonal_data(), pos);
  std::optional<HilbertReport> h;
  if (!w.skip_hilbert) h = hilbert_cached(*v, c, std::nullopt, false, err);
  const bool h_done = h && h->completed;
  std::string verdict = "not run";
  if (h_done) verdict = roots_dim && *roots_dim == h->total ? "agree" : "disagree";
  if (h && !h_done) verdict = "undecided within budget";
  if (c.json) {
    emit_json(out, "weyl dim",
              Json{{"roots_product", roots_dim ? Json(roots_dim->get_str()) : Json(nullptr)},
                   {"hilbert", h ? Json(*h) : Json(nullptr)},
                   {"verdict", verdict}});
  } else {
    const std::string d = roots_dim ? roots_dim->get_str() : "infinite factor";
    if (verdict == "agree")
      out << d << " (agrees with hilbert)\n";
    else if (verdict == "disagree")
      out << d << " (disagrees with hilbert: " << h->total.get_str() << ")\n";
    else
      out << d << " (hilbert " << verdict << ")\n";
    out << "positive roots: " << pos.size() << "\n";
    if (h) out << "hilbert: " << h->headline() << "\n";
    out << "roots-product vs hilbert: " << verdict << "\n";
  }
  if (verdict == "disagree") return exit_internal;
  if (h && !h_done) return exit_undecided;
  return exit_ok;
}

int cmd_super(const Common& c, const std::string& file, const std::string& action, std::optional<std::size_t> index,
              bool heuristic, std::size_t max_points, std::ostream& out) {
  const SuperDatum d = parse_super(read_json_file(file));
  const CartanUpdate update = heuristic ? CartanUpdate::heuristic : CartanUpdate::carry;
  if (action == "reflect") {
    if (!index || *index < 1 || *index > d.theta())
      throw InputError("reflect needs an index between 1 and " + std::to_string(d.theta()));
    const SuperDatum r = reflect_super(d, *index - 1, update);
    if (c.json) {
      emit_json(out, "super reflect", r);
      return exit_ok;
    }
    out << "r_" << *index << "(A,p):\n"
        << "A = " << field_mat(r.a) << "\np = " << parity(r.p) << "\nC = " << mat(r.c) << "\n"
        << "row-rescaled A = " << field_mat(row_canonical(r).a) << "\n"
        << "row-equivalent to input: " << (row_equivalent(r, d) ? "yes" : "no") << "\n"
        << "field: " << d.field.to_string() << "\n";
    return exit_ok;
  }
  if (action == "orbit") {
    const SuperOrbit o = super_orbit(d, max_points, update);
    if (c.json) {
      emit_json(out, "super orbit", o);
      return exit_ok;
    }
    out << "orbit: " << o.points.size() << " classes up to row rescaling\n"
        << "cartan update: " << (heuristic ? "heuristic (d-vanishing, not asserted correct)" : "carried") << "\n";
    for (std::size_t x = 0; x < o.points.size(); ++x)
      out << "x" << x << ": A = " << field_mat(o.points[x].a) << "  p = " << parity(o.points[x].p)
          << "  C = " << mat(o.points[x].c) << "\n";
    for (std::size_t i = 0; i < o.basic.rank(); ++i) {
      out << "r_" << i + 1 << ":";
      for (std::size_t x = 0; x < o.basic.size(); ++x) out << " x" << x << "->x" << o.basic.rho[i][x];
      out << "\n";
    }
    out << "raw involutive: " << (o.raw_involutive ? "yes" : "no") << "\n";
    return exit_ok;
  }
  throw InputError("unknown super action \"" + action + "\"");
}

int cmd_realize(const Common& c, const std::string& file, const std::vector<unsigned>& group, std::uint64_t cap,
                std::ostream& out) {
  const BraidedVectorSpace v = parse_braiding(read_json_file(file), parent_of(file));
  if (v.kind() != BraidedVectorSpace::Kind::diagonal) throw InputError("field kind: realize needs a diagonal braiding");
  if (group.empty()) throw InputError("--group needs at least one cyclic factor");
  for (unsigned m : group)
    if (m == 0) throw InputError("--group factors must be positive");
  const FiniteAbelianGroup g{group};
  const auto data = realize_diagonal_over_group(v.diagonal_data().q, g, cap);
  if (c.json) {
    emit_json(out, "realize", data);
    return exit_ok;
  }
  std::string name;
  for (std::size_t k = 0; k < group.size(); ++k) name += (k ? " x Z_" : "Z_") + std::to_string(group[k]);
  out << "realizations over " << name << ": " << data.size() << "\n";
  for (const auto& d : data) {
    out << "g =";
    for (const auto& x : d.g) out << " " << list(x) << ";";
    out << "  chi =";
    for (const auto& x : d.chi) out << " " << list(x) << ";";
    out << "\n";
  }
  return exit_ok;
}

int cmd_classify(const Common& c, const std::string& action, const std::string& target, std::ostream& out) {
  if (action == "cartan") {
    const CartanDatumInput in = parse_cartan_datum(read_json_file(target));
    const CartanDatumCheck chk = validate_cartan_datum(in.datum, in.a);
    std::optional<Report> lift;
    if (in.lifting) lift = validate_lifting_params_cartan(in.datum, in.a, *in.lifting);
    std::optional<mpz_class> udim;
    if (chk.report.ok()) udim = u_dimension(in.datum, in.a);
    if (c.json) {
      emit_json(out, "classify cartan",
                Json{{"datum", chk},
                     {"lifting", lift ? Json(*lift) : Json(nullptr)},
                     {"u_dimension", udim ? Json(udim->get_str()) : Json(nullptr)}});
    } else {
      print_report(out, chk.report);
      if (lift) print_report(out, *lift);
      for (std::size_t k = 0; k < chk.components.size(); ++k)
        out << "component {" << list(chk.components[k], 1) << "}: N = " << chk.n[k] << "\n";
      if (udim) out << "dim u(D) = " << udim->get_str() << "\n";
    }
    return chk.report.ok() && (!lift || lift->ok()) ? exit_ok : exit_input;
  }
  if (action == "lifting") {
    const RackLiftingInput in = parse_rack_lifting(read_json_file(target));
    const Report rep = validate_lifting_params_rack(in.kind, in.datum, in.lambda);
    const std::size_t order = in.datum.group.order();
    const unsigned m = lifting_dimension(in.kind);
    if (c.json) {
      emit_json(out, "classify lifting",
                Json{{"kind", to_string(in.kind)}, {"report", rep}, {"group_order", order}, {"dimension", m * order}});
    } else {
      print_report(out, rep);
      out << "dim A = " << m << " |G| = " << m * order << "\n";
    }
    return rep.ok() ? exit_ok : exit_input;
  }
  if (action == "dimension") {
    const LiftingKind k = parse_lifting_kind(target);
    if (c.json) {
      emit_json(out, "classify dimension", Json{{"kind", target}, {"multiplier", lifting_dimension(k)}});
    } else {
      out << target << ": dim A = " << lifting_dimension(k) << " |G|\n";
    }
    return exit_ok;
  }
  if (action == "multiplier") {
    const MultiplierCheck m = lifting_multiplier_consistency(parse_lifting_kind(target), c.budget(), c.threads);
    if (c.json) {
      emit_json(out, "classify multiplier", m);
    } else {
      out << target << ": multiplier " << m.multiplier << ", dim B(X,-1) = " << m.engine.get_str() << ": "
          << (m.consistent ? "consistent" : "inconsistent") << "\n";
    }
    return m.consistent ? exit_ok : exit_internal;
  }
  throw InputError("unknown classify action \"" + action + "\"");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nichols algebras of braided vector spaces", "nichols"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_flag("--json", c.json, "machine-readable output");
  app.add_flag("--no-cache", c.no_cache, "ignore NICHOLS_CACHE_DIR");
  app.add_option("--budget-seconds", c.budget_seconds, "wall-clock budget")->check(CLI::PositiveNumber);
  app.add_option("--budget-entries", c.budget_entries, "size budget")->check(CLI::PositiveNumber);

  std::string file, action, other;
  std::function<int()> run;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of B(V)");
  bool until_zero = false, relations = false;
  std::optional<std::size_t> max_degree;
  hilbert->add_option("file", file, "braiding file")->required();
  auto* uz = hilbert->add_flag("--until-zero", until_zero, "run until d_n = 0 (default)");
  hilbert->add_option("--max-degree", max_degree, "stop after this degree")->excludes(uz);
  hilbert->add_flag("--relations", relations, "report new relations per degree");
  hilbert->callback([&] { run = [&] { return cmd_hilbert(c, file, until_zero, max_degree, relations, out, err); }; });

  auto* rack = app.add_subcommand("rack", "rack predicates");
  std::size_t cap = 24;
  rack->add_option("file", file, "rack file")->required();
  rack->add_option("action", action, "check | typeD | typeF | simple | iso")
      ->required()
      ->check(CLI::IsMember({"check", "typeD", "typeF", "simple", "iso"}));
  rack->add_option("other", other, "second rack file for iso");
  rack->add_option("--cap", cap, "size cap for simple and iso");
  rack->callback([&] { run = [&] { return cmd_rack(c, file, action, other, cap, out); }; });

  auto* weyl = app.add_subcommand("weyl", "Weyl groupoids and root systems");
  WeylOptions w;
  weyl->add_option("file", file, "diagonal braiding or GRS file")->required();
  weyl->add_option("action", action, "roots | check | dim")->required()->check(CLI::IsMember({"roots", "check", "dim"}));
  weyl->add_option("--h-max", w.h_max, "Cartan coefficient search bound");
  weyl->add_option("--max-points", w.max_points, "point cap");
  weyl->add_flag("--skip-hilbert", w.skip_hilbert, "no cross-check against the Hilbert series");
  weyl->callback([&] { run = [&] { return cmd_weyl(c, file, action, w, out, err); }; });

  auto* super = app.add_subcommand("super", "reflections of super data (A, p)");
  std::optional<std::size_t> index;
  bool heuristic = false;
  std::size_t max_points = 1000;
  super->add_option("file", file, "super-datum file")->required();
  super->add_option("action", action, "reflect | orbit")->required()->check(CLI::IsMember({"reflect", "orbit"}));
  super->add_option("index", index, "1-based reflection index");
  super->add_flag("--heuristic-cartan", heuristic, "recompute C from vanishing d_m");
  super->add_option("--max-points", max_points, "orbit cap");
  super->callback([&] { run = [&] { return cmd_super(c, file, action, index, heuristic, max_points, out); }; });

  auto* realize = app.add_subcommand("realize", "realizations of a diagonal braiding over a finite abelian group");
  std::vector<unsigned> group;
  std::uint64_t realize_cap = 100'000'000;
  realize->add_option("file", file, "diagonal braiding file")->required();
  realize->add_option("--group", group, "cyclic factors, e.g. --group 2,2")->required()->delimiter(',');
  realize->add_option("--cap", realize_cap, "search cap");
  realize->callback([&] { run = [&] { return cmd_realize(c, file, group, realize_cap, out); }; });

  auto* classify = app.add_subcommand("classify", "validators for classification data");
  classify->add_option("action", action, "cartan | lifting | dimension | multiplier")
      ->required()
      ->check(CLI::IsMember({"cartan", "lifting", "dimension", "multiplier"}));
  classify->add_option("target", other, "datum file, or a lifting kind")->required();
  classify->callback([&] { run = [&] { return cmd_classify(c, action, other, out); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  }
  try {
    return run ? run() : exit_input;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const DivisionByZero& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const BudgetExceeded& e) {
    out << "undecided within budget: " << e.what() << "\n";
    return exit_undecided;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

}  // namespace nichols
