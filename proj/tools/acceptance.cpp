#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nichols/cli.hpp"
#include "nichols/errors.hpp"
#include "nichols/io.hpp"
#include "nichols/symmetrizer.hpp"

using namespace nichols;

namespace {

namespace fs = std::filesystem;

fs::path data_dir = NICHOLS_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + ("failed: " + what);
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(3);
  o << s << "s";
  return o.str();
}

BraidedVectorSpace braiding(const std::string& name) {
  const fs::path p = data_dir / "braidings" / (name + ".json");
  return parse_braiding(read_json_file(p), p.parent_path());
}

Rack rack_file(const std::string& name) {
  const fs::path p = data_dir / "racks" / (name + ".json");
  return parse_rack(read_json_file(p), p.parent_path());
}

struct Timed {
  NicholsTruncation t;
  double seconds;
};

Timed run_engine(const BraidedVectorSpace& v, bool relations = false) {
  EngineOptions o;
  o.relations = relations;
  o.budget = Budget::unlimited();
  const auto t0 = std::chrono::steady_clock::now();
  auto t = hilbert_series(v, o);
  return {std::move(t), seconds_since(t0)};
}

std::string series(const std::vector<std::size_t>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

std::string degrees(const std::vector<std::size_t>& d) { return "{" + series(d) + "}"; }

// Largest n with dim^n <= 10^6; dimension-one spaces are capped at 64.
std::size_t oracle_bound(std::size_t dim) {
  if (dim <= 1) return 64;
  std::size_t n = 0;
  for (unsigned long long p = dim; p <= 1'000'000; p *= dim) ++n;
  return n;
}

unsigned long long euler_phi(unsigned long long n) {
  unsigned long long count = 0;
  for (unsigned long long k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

unsigned long long ipow(unsigned long long b, unsigned e) {
  unsigned long long r = 1;
  while (e--) r *= b;
  return r;
}

long root_order(unsigned conductor, long e) {
  e = ((e % conductor) + conductor) % conductor;
  return conductor / std::gcd<long>(conductor, e);
}

IntVector apply(const IntMatrix& w, const IntVector& v) {
  IntVector out(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += w[i][j] * v[j];
  return out;
}

Outcome criterion1() {
  Outcome o;
  auto v = braiding("o3_2_minus1");
  auto [t, s] = run_engine(v);
  o.require(t.completed && t.total() == 12, "total " + t.total().get_str());
  o.require(s < 1.0, "runtime " + fmt(s));
  const std::size_t n = oracle_bound(v.dim());
  auto r = verify_against_oracle(v, n, Budget::unlimited());
  o.require(r.match, "oracle mismatch");
  o.note("series " + series(t.dims) + ", engine " + fmt(s) + ", symmetrizer ranks agree for n <= " +
         std::to_string(n));
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto minus = run_engine(braiding("o3_2_minus1")).t;
  for (const char* name : {"o3_2_chi", "o3_2_chi_table"}) {
    auto [t, s] = run_engine(braiding(name));
    o.require(t.completed && t.total() == 12, std::string(name) + " total " + t.total().get_str());
    o.require(t.dims == minus.dims, std::string(name) + " series " + series(t.dims));
    o.require(s < 5.0, std::string(name) + " runtime " + fmt(s));
    o.note(std::string(name) + " " + series(t.dims) + " in " + fmt(s));
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto [t, s] = run_engine(braiding("x4w_minus1"));
  o.require(t.completed && t.total() == 72, "total " + t.total().get_str());
  o.require(s < 60.0, "runtime " + fmt(s));
  o.note("total " + t.total().get_str() + " in " + fmt(s));
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto [t, s] = run_engine(braiding("o4_2_minus1"));
  o.require(t.completed && t.total() == 576, "total " + t.total().get_str());
  o.require(s < 1800.0, "runtime " + fmt(s));
  o.note("series " + series(t.dims) + ", total " + t.total().get_str() + " in " + fmt(s));
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto o24 = run_engine(braiding("o4_2_minus1")).t;
  auto [t, s] = run_engine(braiding("o4_4_minus1"), true);
  o.require(t.completed, "O_4^4 did not complete");
  o.require(t.dims == o24.dims, "series " + series(t.dims) + " vs " + series(o24.dims));
  o.require(t.relation_degrees() == std::vector<std::size_t>{2}, "relation degrees " + degrees(t.relation_degrees()));
  o.require(s < 1800.0, "runtime " + fmt(s));
  o.note("series " + series(t.dims) + ", relation degrees " + degrees(t.relation_degrees()) + " in " + fmt(s));
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const char* name : {"x5_2_minus1", "x5_3_minus1"}) {
    auto [t, s] = run_engine(braiding(name), true);
    o.require(t.completed && t.total() == 1280, std::string(name) + " total " + t.total().get_str());
    o.require(t.relation_degrees() == std::vector<std::size_t>{2, 4},
              std::string(name) + " relation degrees " + degrees(t.relation_degrees()));
    o.require(s < 3600.0, std::string(name) + " runtime " + fmt(s));
    o.note(std::string(name) + " total " + t.total().get_str() + ", relation degrees " +
           degrees(t.relation_degrees()) + " in " + fmt(s));
  }
  auto [t, s] = run_engine(braiding("x4w_xi"));
  o.require(t.completed && t.total() == 5184, "x4w_xi total " + t.total().get_str());
  o.note("x4w_xi total " + t.total().get_str() + " in " + fmt(s));
  return o;
}

Outcome criterion7() {
  Outcome o;
  struct Affine {
    const char* name;
    unsigned q;
  };
  for (const auto& [name, q] : {Affine{"x3_2_minus1", 3}, Affine{"x4w_minus1", 4}, Affine{"x5_2_minus1", 5},
                                Affine{"x5_3_minus1", 5}}) {
    auto t = run_engine(braiding(name)).t;
    const unsigned long long want = q * euler_phi(q) * ipow(q - 1, q - 2);
    o.require(t.completed && t.total() == mpz_class(std::to_string(want)),
              std::string(name) + " total " + t.total().get_str() + " vs " + std::to_string(want));
    o.note(std::string(name) + " " + t.total().get_str() + " = " + std::to_string(want));
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::set<std::string> skip = {"bad_conductor", "malformed"};
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(data_dir / "braidings"))
    if (e.path().extension() == ".json" && !skip.count(e.path().stem().string())) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    const std::string name = p.stem().string();
    auto v = parse_braiding(read_json_file(p), p.parent_path());
    const std::size_t n = oracle_bound(v.dim());
    try {
      auto r = verify_against_oracle(v, n, Budget::unlimited());
      o.require(r.match, name + " differs at n = " + std::to_string(r.first_mismatch.value_or(0)));
      o.note(name + " n<=" + std::to_string(n));
    } catch (const InputError& e) {
      // Inputs the engine rejects must be infinite: the oracle never reaches 0.
      auto ranks = symmetrizer_ranks(v, n, Budget::unlimited());
      bool nonzero = std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r > 0; });
      o.require(nonzero, name + " rejected by the engine but the oracle vanishes");
      o.note(name + " rejected (" + e.what() + "), oracle ranks nonzero for n<=" + std::to_string(n));
    }
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  struct A2 {
    const char* name;
    long n;
  };
  for (const auto& [name, n] : {A2{"a2_order3", 3}, A2{"a2_order5", 5}}) {
    const auto t0 = std::chrono::steady_clock::now();
    auto v = braiding(name);
    auto w = weyl_groupoid_of_diagonal(v.diagonal_data());
    o.require(w.status == DiagonalWeylResult::Status::finite, std::string(name) + " groupoid " + w.reason);
    auto roots = dimension_from_roots(v.diagonal_data(), positive_part(w.roots[0]));
    auto total = total_dimension(v, Budget::unlimited());
    const mpz_class cube = n * n * n;
    o.require(roots && *roots == cube, std::string(name) + " roots product");
    o.require(total && *total == cube, std::string(name) + " total");
    o.require(seconds_since(t0) < 60.0, std::string(name) + " runtime");
    o.note(std::string(name) + " " + cube.get_str() + " = roots = total");
  }
  {
    auto v = braiding("a1a1_mixed");
    const auto& q = v.diagonal_data();
    auto json = read_json_file(data_dir / "braidings" / "a1a1_mixed.json");
    const unsigned c = json["conductor"];
    const long n1 = root_order(c, json["q_exponents"][0][0]), n2 = root_order(c, json["q_exponents"][1][1]);
    auto w = weyl_groupoid_of_diagonal(q);
    auto roots = dimension_from_roots(q, positive_part(w.roots[0]));
    auto total = total_dimension(v, Budget::unlimited());
    o.require(roots && *roots == n1 * n2, "a1a1_mixed roots product");
    o.require(total && *total == n1 * n2, "a1a1_mixed total");
    o.note("a1a1_mixed " + std::to_string(n1) + "*" + std::to_string(n2) + " = roots = total");
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  for (const char* name : {"a2_order3", "a2_order5", "b2_order5", "a1a1_mixed", "super_rank2", "diag_minus1_z8"}) {
    auto w = weyl_groupoid_of_diagonal(braiding(name).diagonal_data());
    o.require(w.status == DiagonalWeylResult::Status::finite, std::string(name) + " groupoid " + w.reason);
    std::vector<std::optional<mpz_class>> dims;
    for (std::size_t x = 0; x < w.basic.size(); ++x)
      dims.push_back(total_dimension(BraidedVectorSpace::diagonal(w.point(x)), Budget::unlimited()));
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t x = 0; x < w.basic.size(); ++x) {
        const std::size_t y = w.basic.rho[i][x];
        if (!dims[x] || !dims[y]) continue;
        ++pairs;
        o.require(*dims[x] == *dims[y], std::string(name) + " point " + std::to_string(x) + " rho_" +
                                            std::to_string(i + 1));
      }
    o.require(pairs == 2 * w.basic.size(), std::string(name) + " some side did not complete");
    o.note(std::string(name) + " " + std::to_string(w.basic.size()) + " points, dim " +
           (dims[0] ? dims[0]->get_str() : "?"));
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  {
    const auto t0 = std::chrono::steady_clock::now();
    auto x = rack_file("s6_123");
    auto r = is_type_D(x, Budget::unlimited());
    o.require(r.status == SearchStatus::found && r.witness && verify_type_D(x, *r.witness), "s6_123 witness");
    o.require(seconds_since(t0) < 300.0, "s6_123 runtime");
    o.note("s6_123 witness verified in " + fmt(seconds_since(t0)));
  }
  for (const char* name : {"s3_transpositions", "s4_transpositions", "s5_transpositions", "s5_122"}) {
    const auto t0 = std::chrono::steady_clock::now();
    auto r = is_type_D(rack_file(name), Budget::unlimited());
    o.require(r.status == SearchStatus::none, std::string(name) + " status " + to_string(r.status));
    o.require(seconds_since(t0) < 300.0, std::string(name) + " runtime");
    o.note(std::string(name) + " none in " + fmt(seconds_since(t0)));
  }
  return o;
}

Outcome criterion12() {
  Outcome o;
  auto o23 = braiding("o3_2_minus1").rack();
  o.require(rack_isomorphic(field_affine_rack(3, "2"), o23), "X_{3,2} vs O_2^3");
  o.require(rack_isomorphic(rack_file("f3_affine"), o23), "f3_affine vs O_2^3");
  o.require(is_simple(simple_affine_rack(2, {1, 1, 1})), "simple_affine_rack(2, X^2+X+1)");
  for (std::size_t n = 1; n <= 6; ++n) {
    auto r = is_type_D(abelian_rack(n));
    o.require(r.status == SearchStatus::none, "abelian rack of size " + std::to_string(n));
  }
  o.note("X_{3,2} = O_2^3, F_4 affine simple, abelian racks 1..6 not type D");
  return o;
}

Outcome criterion13() {
  Outcome o;
  for (const char* name : {"a2", "b2"}) {
    auto g = parse_grs(read_json_file(data_dir / "grs" / (std::string(name) + ".json")));
    o.require(check_grs_axioms({g.basic, g.cartan, *g.roots}).ok(), std::string(name) + " axioms");
  }
  for (const char* name : {"a2_missing_root", "b2_missing_root"}) {
    auto g = parse_grs(read_json_file(data_dir / "grs" / (std::string(name) + ".json")));
    o.require(!check_grs_axioms({g.basic, g.cartan, *g.roots}).ok(), std::string(name) + " should fail");
  }
  std::vector<GRSDatum> data;
  for (const char* name : {"a2", "b2"}) {
    auto g = parse_grs(read_json_file(data_dir / "grs" / (std::string(name) + ".json")));
    data.push_back({g.basic, g.cartan, *g.roots});
  }
  for (const char* name : {"a2_order5", "b2_order5", "super_rank2", "diag_minus1_z8"})
    data.push_back(weyl_groupoid_of_diagonal(braiding(name).diagonal_data()).grs());
  std::size_t morphisms = 0;
  for (const auto& r : data) {
    o.require(check_grs_axioms(r).ok(), "axioms on a generated datum");
    auto w = generate_weyl_groupoid(r.basic, r.cartan);
    for (const auto& f : w.morphisms) {
      std::set<IntVector> image, target(r.roots[f.target].begin(), r.roots[f.target].end());
      for (const auto& v : r.roots[f.source]) image.insert(apply(f.w, v));
      o.require(image == target, "w(roots) at morphism " + std::to_string(f.source) + "->" + std::to_string(f.target));
    }
    morphisms += w.morphisms.size();
    for (std::size_t x = 0; x < r.basic.size(); ++x)
      o.require(w.coxeter[x] == coxeter_matrix_from_roots(r.roots[x], r.basic.rank()), "coxeter matrix");
    o.require(coxeter_relations_check(w, w.coxeter).ok(), "coxeter relations");
  }
  o.note(std::to_string(data.size()) + " root systems, " + std::to_string(morphisms) + " morphisms checked");
  return o;
}

SuperDatum super_datum(const IntMatrix& a, std::vector<int> p, const IntMatrix& c) {
  SuperDatum d;
  for (const auto& row : a) {
    d.a.emplace_back();
    for (long v : row) d.a.back().emplace_back(v);
  }
  d.p = std::move(p);
  d.c = c;
  d.validate();
  return d;
}

Outcome criterion14() {
  Outcome o;
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> e(-4, 4), c(-3, 0);
  int done = 0;
  while (done < 100) {
    IntMatrix a(3, std::vector<long>(3)), cm(3, std::vector<long>(3, 2));
    std::vector<int> p(3);
    for (std::size_t j = 0; j < 3; ++j) {
      p[j] = static_cast<int>(rng() % 2);
      for (std::size_t k = 0; k < 3; ++k) {
        a[j][k] = e(rng);
        if (j != k) cm[j][k] = c(rng);
      }
    }
    bool ok = true;
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) ok &= j == k || (a[j][k] == 0) == (a[k][j] == 0);
    if (!ok) continue;
    auto d = super_datum(a, p, cm);
    for (std::size_t i = 0; i < 3; ++i) {
      auto r = reflect_super(d, i);
      o.require(r.a[i][i] == d.a[i][i], "diagonal entry");
      for (std::size_t j = 0; j < 3; ++j) {
        const long want = ((d.p[j] - d.c[i][j] * d.p[i]) % 2 + 2) % 2;
        o.require(r.p[j] == want, "reflected parity");
      }
      o.require(reflect_super(r, i).p == d.p, "parity involution");
    }
    ++done;
  }
  const IntMatrix a2 = {{2, -1}, {-1, 2}}, b2 = {{2, -2}, {-1, 2}};
  for (const auto& m : {a2, b2}) {
    auto orbit = super_orbit(super_datum(m, {0, 0}, m));
    o.require(orbit.points.size() == 1, "even orbit size " + std::to_string(orbit.points.size()));
  }
  auto even = parse_super(read_json_file(data_dir / "super" / "sl3_even.json"));
  o.require(super_orbit(even).points.size() == 1, "sl3_even orbit");
  auto r = reflect_super(super_datum(a2, {0, 0}, a2), 0);
  o.require(r.a[0][1] == -1 && r.a[1][1] == -2, "sl3 reflection values");
  o.require(row_equivalent(r, super_datum(a2, {0, 0}, a2)), "sl3 reflection up to row rescaling");
  o.note("100 random data, even orbits collapse, sl3 a12 = -1, a22 = -2");
  return o;
}

Outcome criterion15() {
  Outcome o;
  const std::string file = (data_dir / "braidings" / "o6_2_minus1.json").string();
  std::ostringstream out, err;
  const int code = run_cli({"--no-cache", "--budget-seconds", "20", "hilbert", file}, out, err);
  o.require(code == exit_undecided, "exit code " + std::to_string(code));
  o.require(out.str().find("undecided within budget") != std::string::npos, "output " + out.str());
  o.require(out.str().find("total") == std::string::npos, "dimension claimed");
  std::string line = out.str().substr(0, out.str().find('\n'));
  o.note(line);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--data" && i + 1 < argc) {
      data_dir = argv[++i];
    } else if (a == "--only" && i + 1 < argc) {
      only.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--data DIR] [--only N]...\n";
      return 1;
    }
  }
  std::vector<std::function<Outcome()>> criteria = {
      criterion1,  criterion2,  criterion3,  criterion4,  criterion5,  criterion6,
      criterion7,  criterion8,  criterion9,  criterion10, criterion11, criterion12,
      criterion13, criterion14, criterion15};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int n = static_cast<int>(k + 1);
    if (!only.empty() && !only.count(n)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note(std::string("error: ") + e.what());
    }
    failed += !o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " [" << fmt(seconds_since(t0)) << "] "
              << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
