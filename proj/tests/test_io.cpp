#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <random>

#include <unistd.h>

#include "nichols/cache.hpp"
#include "nichols/errors.hpp"
#include "nichols/io.hpp"

using namespace nichols;

namespace {

const std::filesystem::path kData = NICHOLS_DATA_DIR;

template <class T>
T round_trip(const T& x) {
  return Json::parse(Json(x).dump()).get<T>();
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("nichols_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(d);
  return d;
}

}  // namespace

TEST(Io, ScalarFormats) {
  EXPECT_EQ(parse_scalar(Json::parse(R"({"zeta": [3, 1]})")), CycloNumber::root_of_unity(3, 1));
  EXPECT_EQ(parse_scalar(Json::parse(R"({"conductor": 3, "coeffs": ["1/2", "-3"]})")),
            CycloNumber(3, {mpq_class(1, 2), mpq_class(-3)}));
  EXPECT_EQ(parse_scalar(Json(-1)), CycloNumber(-1));
  EXPECT_EQ(parse_scalar(Json("2/4")), CycloNumber(mpq_class(1, 2)));
  for (const auto& x : {CycloNumber::root_of_unity(12, 5), CycloNumber(7), CycloNumber(5, {1, 2, 3, mpq_class(-1, 7)})})
    EXPECT_EQ(parse_scalar(scalar_to_json(x)), x);
}

TEST(Io, ScalarDiagnostics) {
  EXPECT_NE(error_of([] { parse_scalar(Json::parse(R"({"conductor": 0, "coeffs": []})"), "q"); })
                .find("field q.conductor"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_scalar(Json::parse(R"({"conductor": 5, "coeffs": [1]})"), "q"); }).find("phi(5)"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_scalar(Json("1/0"), "x"); }).find("field x"), std::string::npos);
  EXPECT_NE(error_of([] { parse_scalar(Json("abc"), "x"); }).find("bad rational"), std::string::npos);
}

TEST(Io, SyntaxErrorNamesLineAndColumn) {
  const std::string msg = error_of([] { parse_json_text("{\n  \"a\": 1,\n  \"b\" 2\n}", "f.json"); });
  EXPECT_EQ(msg.rfind("f.json:3:", 0), 0u) << msg;
  EXPECT_NE(error_of([] { read_json_file(kData / "braidings" / "malformed.json"); }).find("malformed.json:4:"),
            std::string::npos);
  EXPECT_NE(error_of([] { read_json_file(kData / "no_such_file.json"); }).find("cannot read"), std::string::npos);
}

TEST(Io, BraidingFiles) {
  auto v = parse_braiding(read_json_file(kData / "braidings" / "a2_order3.json"));
  EXPECT_EQ(v.dim(), 2u);
  EXPECT_EQ(v.diagonal_data().q[0][1], CycloNumber::root_of_unity(3, 2));
  auto o = parse_braiding(read_json_file(kData / "braidings" / "o3_2_minus1.json"));
  EXPECT_EQ(o.kind(), BraidedVectorSpace::Kind::rack);
  EXPECT_EQ(o.dim(), 3u);
  const auto dir = kData / "braidings";
  auto t = parse_braiding(read_json_file(dir / "o3_2_chi_table.json"), dir);
  EXPECT_EQ(t.rack().size(), 3u);
  EXPECT_FALSE(t.cocycle().scalar_value(0, 1) == t.cocycle().scalar_value(0, 0));
}

TEST(Io, XiCocycleOnTetrahedralRack) {
  auto v = parse_braiding(read_json_file(kData / "braidings" / "x4w_xi.json"));
  EXPECT_TRUE(check_cocycle(v.rack(), v.cocycle()).ok);
  EXPECT_TRUE(check_braid_equation(v).ok);
  const CycloNumber xi = CycloNumber::root_of_unity(3, 1);
  for (RackElement i = 0; i < 4; ++i)
    for (RackElement j = 0; j < 4; ++j) {
      const CycloNumber& q = v.cocycle().scalar_value(i, j);
      EXPECT_TRUE(q == xi || q == -xi);
    }
  EngineOptions o;
  o.max_degree = 3;
  EXPECT_EQ(hilbert_series(v, o).dims, (std::vector<std::size_t>{1, 4, 12, 28}));
}

TEST(Io, BraidingDiagnostics) {
  EXPECT_NE(error_of([] { parse_braiding(read_json_file(kData / "braidings" / "bad_conductor.json")); })
                .find("field conductor"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_braiding(Json::parse(R"({"kind":"diagonal","conductor":3,"q_exponents":[[1,2],[0]]})")); })
                .find("field q_exponents[1]"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_braiding(Json::parse(R"({"kind":"other"})")); }).find("field kind"), std::string::npos);
  EXPECT_NE(error_of([] { parse_braiding(Json::parse(R"({"kind":"diagonal","q_exponents":[[1]]})")); })
                .find("field conductor: missing"),
            std::string::npos);
  // A table that is not a cocycle.
  const std::string bad =
      R"({"kind":"rack","rack":{"kind":"table","op":[[0,2,1],[2,1,0],[1,0,2]]},
          "cocycle":{"kind":"table","entries":[[1,2,1],[1,1,1],[1,1,1]]}})";
  EXPECT_NE(error_of([&] { parse_braiding(Json::parse(bad)); }).find("field cocycle"), std::string::npos);
  EXPECT_NE(error_of([] { parse_braiding(Json::parse(R"({"kind":"rack","rack":{"kind":"table","op":[[0,0],[1,1]]},"cocycle":{"kind":"constant","zeta":[2,1]}})")); })
                .find("field rack.op"),
            std::string::npos);
}

TEST(Io, RackFiles) {
  EXPECT_EQ(parse_rack(read_json_file(kData / "racks" / "s6_123.json")).size(), 120u);
  EXPECT_EQ(parse_rack(read_json_file(kData / "racks" / "f3_affine.json")).size(), 3u);
  EXPECT_EQ(parse_rack(read_json_file(kData / "racks" / "f4_simple.json")).size(), 4u);
  EXPECT_EQ(parse_rack(Json::parse(R"({"kind":"field_affine","q":4,"multiplier":"w"})")).size(), 4u);
  EXPECT_NE(error_of([] { parse_rack(Json::parse(R"j({"kind":"conjugacy","group":["(1 2)"],"element":"(1 3)"})j")); })
                .find("field element"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_rack(Json::parse(R"({"kind":"table","op":[[0,5],[1,1]]})")); }).find("op[0][1]"),
            std::string::npos);
}

TEST(Io, CanonicalBraidingIgnoresPresentation) {
  auto a = parse_braiding(Json::parse(R"({"kind":"diagonal","conductor":3,"q_exponents":[[1,2],[0,1]]})"));
  auto b = parse_braiding(Json::parse(R"({"kind":"diagonal","conductor":6,"q_exponents":[[2,4],[0,2]]})"));
  auto c = parse_braiding(Json::parse(R"({"kind":"diagonal","conductor":3,"q_exponents":[[1,1],[0,1]]})"));
  EXPECT_EQ(canonical_braiding(a).dump(), canonical_braiding(b).dump());
  EXPECT_NE(canonical_braiding(a).dump(), canonical_braiding(c).dump());
}

TEST(Io, GrsFiles) {
  auto g = parse_grs(read_json_file(kData / "grs" / "a2.json"));
  ASSERT_TRUE(g.roots);
  EXPECT_EQ((*g.roots)[0].size(), 6u);
  EXPECT_FALSE(parse_grs(read_json_file(kData / "grs" / "rank1.json")).roots);
  EXPECT_NE(error_of([] { parse_grs(Json::parse(R"({"points":["x"],"rho":[[1]],"cartan":[[[2]]]})")); }).find("field rho"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_grs(Json::parse(R"({"points":["x"],"rho":[[0]],"cartan":[[[2,0]]]})")); })
                .find("field cartan[0]"),
            std::string::npos);
}

TEST(Io, SuperFiles) {
  auto d = parse_super(read_json_file(kData / "super" / "sl21_f5.json"));
  EXPECT_EQ(d.field.p, 5u);
  EXPECT_EQ(d.a[1][0], 4);
  EXPECT_NE(error_of([] { parse_super(Json::parse(R"({"A":[[2]],"p":[0],"C":[[2]],"field":"Fp:4"})")); }).find("field field"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_super(Json::parse(R"({"A":[[2]],"p":[0]})")); }).find("field C: missing"),
            std::string::npos);
}

TEST(Io, ClassifyFiles) {
  auto c = parse_cartan_datum(read_json_file(kData / "classify" / "cartan_a2_z3.json"));
  EXPECT_EQ(c.datum.group.order(), 9u);
  ASSERT_TRUE(c.lifting);
  EXPECT_EQ(c.lifting->mu.size(), 3u);
  auto l = parse_rack_lifting(read_json_file(kData / "classify" / "lifting_o3_2_chi4.json"));
  EXPECT_EQ(l.datum.group.order(), 24u);
  EXPECT_EQ(l.lambda.size(), 2u);
  EXPECT_NE(error_of([] {
              parse_rack_lifting(Json::parse(
                  R"j({"lifting":"O3_2","datum":{"group":["(1 2)","(1 2 3)"],"character":[-1,-1]},"lambda":[0,0]})j"));
            }).find("do not extend"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_rack_lifting(Json::parse(R"({"lifting":"O9","datum":"standard","lambda":[]})")); })
                .find("field lifting"),
            std::string::npos);
  EXPECT_NE(error_of([] { parse_cartan_datum(Json::parse(R"({"group":[3],"g":[[3]],"chi":[[1]],"cartan":[[2]]})")); })
                .find("field g[0][0]"),
            std::string::npos);
}

TEST(Io, RoundTripReports) {
  auto v = parse_braiding(read_json_file(kData / "braidings" / "o3_2_minus1.json"));
  EngineOptions opt;
  opt.relations = true;
  auto h = HilbertReport::from(hilbert_series(v, opt), std::nullopt, true);
  EXPECT_EQ(round_trip(h), h);
  HilbertReport partial = h;
  partial.completed = false;
  partial.incomplete = true;
  partial.reason = "wall-clock budget exceeded";
  partial.max_degree = 7;
  partial.total = mpz_class("123456789012345678901234567890");
  EXPECT_EQ(round_trip(partial), partial);

  Report rep{{{"a", true, ""}, {"b", false, "detail"}}};
  EXPECT_EQ(round_trip(rep), rep);

  const Rack s6 = parse_rack(read_json_file(kData / "racks" / "s6_123.json"));
  auto d = is_type_D(s6);
  ASSERT_EQ(d.status, SearchStatus::found);
  EXPECT_EQ(round_trip(d), d);
  TypeDResult none{SearchStatus::budget_exceeded, std::nullopt, 17};
  EXPECT_EQ(round_trip(none), none);
  TypeFResult f{SearchStatus::found, TypeFWitness{{0, 1, 2, 3}, {{0}, {1}, {2}, {3}}}, 5};
  EXPECT_EQ(round_trip(f), f);

  auto w = weyl_groupoid_of_diagonal(DiagonalBraiding::from_exponents(10, {{5, 8}, {0, 2}}));
  EXPECT_EQ(round_trip(w), w);

  auto sd = parse_super(read_json_file(kData / "super" / "sl21_f5.json"));
  auto sd2 = round_trip(sd);
  EXPECT_EQ(sd2, sd);
  EXPECT_EQ(sd2.field.p, sd.field.p);
  auto orbit = super_orbit(parse_super(read_json_file(kData / "super" / "sl13.json")));
  EXPECT_EQ(round_trip(orbit), orbit);

  MultiplierCheck m{12, mpz_class(12), true};
  EXPECT_EQ(round_trip(m), m);
  auto c = parse_cartan_datum(read_json_file(kData / "classify" / "cartan_a2_z3.json"));
  auto chk = validate_cartan_datum(c.datum, c.a);
  EXPECT_EQ(round_trip(chk), chk);
  EXPECT_EQ(round_trip(c.datum), c.datum);
  auto x = CycloNumber::root_of_unity(15, 4) + CycloNumber(mpq_class(2, 3));
  EXPECT_EQ(round_trip(x), x);
}

TEST(Io, RoundTripRandomHilbertReports) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    HilbertReport r;
    r.theta = rng() % 10;
    for (unsigned k = rng() % 8; k > 0; --k) r.dims.push_back(rng() % 1000);
    r.completed = rng() % 2;
    r.incomplete = !r.completed && rng() % 2;
    r.reason = r.incomplete ? "entry budget exceeded" : "";
    r.total = mpz_class(static_cast<unsigned long>(rng())) * mpz_class(static_cast<unsigned long>(rng()));
    if (rng() % 2) r.max_degree = rng() % 20;
    r.relations = rng() % 2;
    for (unsigned k = rng() % 4; k > 0; --k) {
      r.relation_degrees.push_back(rng() % 9);
      r.new_relations.push_back(rng() % 9);
      r.ideal_dims.emplace_back(static_cast<unsigned long>(rng()));
    }
    if (rng() % 3 == 0) r.warnings.push_back("Hilbert series is not palindromic");
    EXPECT_EQ(round_trip(r), r);
  }
}

TEST(Cache, Sha256KnownValues) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Cache, HitReturnsStoredBytes) {
  ResultCache cache(fresh_dir("hit"));
  const Json input{{"x", 1}};
  const auto key = cache.key("hilbert", input, Json{{"max_degree", nullptr}});
  EXPECT_FALSE(cache.get(key));
  const Json value{{"dims", {1, 3, 4, 3, 1}}, {"total", "12"}};
  cache.put(key, value);
  auto hit = cache.get(key);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->dump(), value.dump());
  EXPECT_NE(key, cache.key("hilbert", input, Json{{"max_degree", 3}}));
  EXPECT_NE(key, cache.key("weyl", input, Json{{"max_degree", nullptr}}));
  std::filesystem::remove_all(cache.dir());
}

TEST(Cache, VersionBumpInvalidates) {
  const auto dir = fresh_dir("version");
  ResultCache v1(dir, "1.0.0"), v2(dir, "1.0.1");
  const Json input{{"x", 2}};
  const auto k1 = v1.key("hilbert", input, {});
  v1.put(k1, Json{{"total", "2"}});
  EXPECT_NE(k1, v2.key("hilbert", input, {}));
  EXPECT_FALSE(v2.get(v2.key("hilbert", input, {})));
  // An entry written by another version under the same name is stale.
  EXPECT_FALSE(v2.get(k1));
  EXPECT_EQ(v2.discarded(), 1u);
  std::filesystem::remove_all(dir);
}

TEST(Cache, CorruptEntriesAreDiscarded) {
  ResultCache cache(fresh_dir("corrupt"));
  const auto key = cache.key("hilbert", Json{{"x", 3}}, {});
  const Json value{{"total", "12"}};
  auto write = [&](const std::string& text) {
    std::ofstream(cache.entry_path(key), std::ios::trunc) << text;
  };
  cache.put(key, value);
  std::ifstream in(cache.entry_path(key));
  std::string good((std::istreambuf_iterator<char>(in)), {});
  // Tampered payload, truncated file, wrong checksum, garbage.
  std::string tampered = good;
  tampered.replace(tampered.find("12"), 2, "13");
  for (const std::string& bad : {tampered, good.substr(0, good.size() / 2), std::string("not json"),
                                  std::string(R"({"result":1})")}) {
    write(bad);
    EXPECT_FALSE(cache.get(key));
    EXPECT_FALSE(std::filesystem::exists(cache.entry_path(key)));
  }
  EXPECT_EQ(cache.discarded(), 4u);
  cache.put(key, value);
  EXPECT_EQ(cache.get(key)->dump(), value.dump());
  std::filesystem::remove_all(cache.dir());
}
