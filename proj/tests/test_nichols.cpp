#include <gtest/gtest.h>

#include <random>

#include "nichols/nichols.hpp"
#include "nichols/symmetrizer.hpp"

using namespace nichols;

namespace {

Permutation P(const char* s) { return Permutation::parse_cycles(s); }
CycloNumber z(unsigned n, long k) { return CycloNumber::root_of_unity(n, k); }

PermGroup sym(unsigned n) {
  std::string cyc = "(";
  for (unsigned i = 1; i <= n; ++i) cyc += (i > 1 ? " " : "") + std::to_string(i);
  return PermGroup({P("(1 2)"), Permutation::parse_cycles(cyc + ")")});
}

BraidedVectorSpace rack_minus_one(const Rack& x) {
  return BraidedVectorSpace::rack_type(x, RackCocycle::constant(x, CycloNumber(-1)));
}

BraidedVectorSpace diag(const CycloMatrix& q) { return BraidedVectorSpace::diagonal(DiagonalBraiding{q}); }

BraidedVectorSpace diag_exp(unsigned n, const std::vector<std::vector<long>>& e) {
  return BraidedVectorSpace::diagonal(DiagonalBraiding::from_exponents(n, e));
}

std::vector<std::size_t> dims_of(const BraidedVectorSpace& v, std::optional<std::size_t> max = std::nullopt) {
  EngineOptions o;
  o.max_degree = max;
  return hilbert_series(v, o).dims;
}

// Random exponent matrix mod n with q_ii != 1.
std::vector<std::vector<long>> random_exponents(std::mt19937& rng, unsigned n, std::size_t theta) {
  std::uniform_int_distribution<long> e(0, n - 1), nz(1, n - 1);
  std::vector<std::vector<long>> m(theta, std::vector<long>(theta));
  for (std::size_t i = 0; i < theta; ++i)
    for (std::size_t j = 0; j < theta; ++j) m[i][j] = i == j ? nz(rng) : e(rng);
  return m;
}

// -min{m : (m+1)_{q_ii} (1 - q_ii^m q_ij q_ji) = 0}
std::optional<int> cartan_formula(const CycloMatrix& q, std::size_t i, std::size_t j, std::size_t h_max) {
  CycloNumber qn(1), sum(0);
  for (std::size_t m = 0; m <= h_max; ++m) {
    sum += qn;
    if (sum.is_zero() || (qn * q[i][j] * q[j][i]).is_one()) return -static_cast<int>(m);
    qn *= q[i][i];
  }
  return std::nullopt;
}

}  // namespace

TEST(Nichols, OneDimensionalRootOfUnity) {
  for (unsigned n = 2; n <= 7; ++n) {
    auto t = hilbert_series(diag({{z(n, 1)}}));
    EXPECT_TRUE(t.completed);
    EXPECT_EQ(t.dims, std::vector<std::size_t>(n, 1));
    EXPECT_EQ(t.total(), n);
  }
}

TEST(Nichols, FominKirillovThree) {
  Rack x = conjugacy_class_rack(sym(3), P("(1 2)"));
  for (const auto& v : {rack_minus_one(x), BraidedVectorSpace::rack_type(x, RackCocycle::transposition_sign(x))}) {
    auto t = hilbert_series(v);
    EXPECT_TRUE(t.completed);
    EXPECT_EQ(t.dims, (std::vector<std::size_t>{1, 3, 4, 3, 1}));
    EXPECT_EQ(t.summary(), "1, 3, 4, 3, 1 | total 12 | complete");
    EXPECT_TRUE(t.warnings.empty());
  }
}

TEST(Nichols, TetrahedronRack) {
  auto t = hilbert_series(rack_minus_one(field_affine_rack(4, "w")));
  EXPECT_TRUE(t.completed);
  EXPECT_EQ(t.total(), 72);
}

TEST(Nichols, FominKirillovFour) {
  auto t2 = hilbert_series(rack_minus_one(conjugacy_class_rack(sym(4), P("(1 2)"))));
  EXPECT_EQ(t2.total(), 576);
  EXPECT_EQ(t2.dims, (std::vector<std::size_t>{1, 6, 19, 42, 71, 96, 106, 96, 71, 42, 19, 6, 1}));
  auto t4 = hilbert_series(rack_minus_one(conjugacy_class_rack(sym(4), P("(1 2 3 4)"))));
  EXPECT_EQ(t4.dims, t2.dims);
  auto chi = hilbert_series(BraidedVectorSpace::rack_type(conjugacy_class_rack(sym(4), P("(1 2)")),
                                                          RackCocycle::transposition_sign(conjugacy_class_rack(sym(4), P("(1 2)")))));
  EXPECT_EQ(chi.dims, t2.dims);
}

TEST(Nichols, AffineRackFive) {
  EXPECT_EQ(total_dimension(rack_minus_one(field_affine_rack(5, "2"))), mpz_class(1280));
}

TEST(Nichols, CartanA2OrderThree) {
  // q_11 = q_22 = zeta_3, q_12 q_21 = zeta_3^-1
  EXPECT_EQ(total_dimension(diag_exp(3, {{1, 2}, {0, 1}})), mpz_class(27));
}

TEST(Nichols, DiagonalRejectsTrivialSelfBraiding) {
  EXPECT_THROW(hilbert_series(diag({{CycloNumber(1), CycloNumber(-1)}, {CycloNumber(-1), CycloNumber(-1)}})),
               InputError);
  Rack x = conjugacy_class_rack(sym(3), P("(1 2)"));
  EXPECT_THROW(hilbert_series(BraidedVectorSpace::rack_type(x, RackCocycle::constant(x, CycloNumber(1)))), InputError);
}

TEST(Nichols, MaxDegreeTruncates) {
  Rack x = conjugacy_class_rack(sym(3), P("(1 2)"));
  EngineOptions o;
  o.max_degree = 2;
  auto t = hilbert_series(rack_minus_one(x), o);
  EXPECT_FALSE(t.completed);
  EXPECT_FALSE(t.incomplete);
  EXPECT_EQ(t.dims, (std::vector<std::size_t>{1, 3, 4}));
  EXPECT_EQ(t.summary(), "1, 3, 4 | total 8 | truncated at degree 2");
  o.max_degree = 10;
  t = hilbert_series(rack_minus_one(x), o);
  EXPECT_TRUE(t.completed);
  EXPECT_EQ(t.dims.size(), 5u);
}

TEST(Nichols, BudgetGivesIncompletePrefix) {
  EngineOptions o;
  o.budget.max_entries = 2000;
  auto t = hilbert_series(rack_minus_one(conjugacy_class_rack(sym(4), P("(1 2)"))), o);
  EXPECT_TRUE(t.incomplete);
  EXPECT_FALSE(t.completed);
  ASSERT_GE(t.dims.size(), 2u);
  const std::vector<std::size_t> full{1, 6, 19, 42, 71, 96, 106, 96, 71, 42, 19, 6, 1};
  EXPECT_LT(t.dims.size(), full.size());
  EXPECT_TRUE(std::equal(t.dims.begin(), t.dims.end(), full.begin()));
  EXPECT_EQ(t.degrees.size(), t.dims.size());
  EXPECT_FALSE(total_dimension(rack_minus_one(conjugacy_class_rack(sym(4), P("(1 2)"))), o.budget));
  EXPECT_NE(t.summary().find("incomplete"), std::string::npos);
}

TEST(Nichols, UnknownCaseEndsInBudget) {
  EngineOptions o;
  o.budget.seconds = 2;
  auto t = hilbert_series(rack_minus_one(conjugacy_class_rack(sym(6), P("(1 2)"))), o);
  EXPECT_TRUE(t.incomplete);
  EXPECT_FALSE(t.completed);
}

TEST(Nichols, RelationReports) {
  auto fk = relation_report(rack_minus_one(conjugacy_class_rack(sym(3), P("(1 2)"))), 6);
  ASSERT_GE(fk.ideal_dims.size(), 3u);
  EXPECT_EQ(fk.ideal_dims[2], 5);
  EXPECT_EQ(fk.new_relations[2], 5u);
  EXPECT_EQ(fk.relation_degrees(), std::vector<std::size_t>{2});
  EXPECT_EQ(fk.new_relations.size(), 6u);  // degrees 0..5, 5 is the vanishing degree

  auto x5 = relation_report(rack_minus_one(field_affine_rack(5, "2")), 20);
  EXPECT_EQ(x5.relation_degrees(), (std::vector<std::size_t>{2, 4}));

  auto one = relation_report(diag({{z(3, 1)}}), 5);
  EXPECT_EQ(one.relation_degrees(), std::vector<std::size_t>{3});
  EXPECT_EQ(one.new_relations[3], 1u);
}

TEST(Nichols, NewRelationsAtDegreeTwoAreAllOfJ2) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    auto v = diag_exp(6, random_exponents(rng, 6, 3));
    auto r = relation_report(v, 2);
    ASSERT_GE(r.new_relations.size(), 3u);
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(r.new_relations[2])), r.ideal_dims[2]);
  }
}

TEST(Nichols, RelationBasesLieInTheIdeal) {
  for (const auto& v : {rack_minus_one(conjugacy_class_rack(sym(3), P("(1 2)"))), diag_exp(5, {{1, 4}, {0, 1}}),
                        diag_exp(4, {{2, 1}, {3, 1}})}) {
    auto r = relation_report(v, 6, {}, true);
    for (std::size_t n = 0; n < r.new_relation_bases.size(); ++n) {
      EXPECT_EQ(r.new_relation_bases[n].size(), r.new_relations[n]);
      for (const auto& t : r.new_relation_bases[n]) EXPECT_TRUE(ideal_membership(v, t));
    }
  }
}

TEST(Nichols, CartanExamples) {
  auto a2 = diag_exp(5, {{1, 4}, {0, 1}});
  EXPECT_EQ(cartan_coefficient(a2, 0, 1, 6), -1);
  auto commuting = diag_exp(5, {{1, 2}, {3, 4}});
  EXPECT_EQ(cartan_coefficient(commuting, 0, 1, 6), 0);
  // q_11 = -1: c_1j = 0 iff q_1j q_j1 = 1, else -1 iff q_1j q_j1 = -1
  EXPECT_EQ(cartan_coefficient(diag_exp(6, {{3, 3}, {0, 2}}), 0, 1, 6), -1);
  EXPECT_EQ(cartan_coefficient(diag_exp(6, {{3, 1}, {0, 2}}), 0, 1, 6), -1);
  EXPECT_THROW(cartan_coefficient(a2, 0, 0, 6), InputError);
  auto profile = cartan_profile(a2, 6);
  ASSERT_TRUE(profile);
  EXPECT_EQ(profile->matrix, (std::vector<std::vector<int>>{{2, -1}, {-1, 2}}));
  EXPECT_EQ(profile->witness[0][1], 2u);
}

TEST(Nichols, CartanMatchesFormula) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = std::uniform_int_distribution<unsigned>(2, 8)(rng);
    auto e = random_exponents(rng, n, 2);
    auto d = DiagonalBraiding::from_exponents(n, e);
    auto v = BraidedVectorSpace::diagonal(d);
    for (std::size_t i = 0; i < 2; ++i)
      EXPECT_EQ(cartan_coefficient(v, i, 1 - i, 5), cartan_formula(d.q, i, 1 - i, 5)) << "trial " << trial;
  }
}

TEST(Nichols, CartanUnboundedReportsNothing) {
  // q_11 = zeta_8 and q_12 q_21 = zeta_8^3: ad powers vanish only at m = 7
  auto v = diag_exp(8, {{1, 3}, {0, 2}});
  EXPECT_FALSE(cartan_coefficient(v, 0, 1, 3));
  EXPECT_EQ(cartan_coefficient(v, 0, 1, 8), cartan_formula(DiagonalBraiding::from_exponents(8, {{1, 3}, {0, 2}}).q, 0, 1, 8));
}

TEST(Nichols, OracleExamples) {
  auto fk = verify_against_oracle(rack_minus_one(conjugacy_class_rack(sym(3), P("(1 2)"))), 4);
  EXPECT_TRUE(fk.match);
  auto four = verify_against_oracle(diag({{z(4, 1)}}), 4);
  EXPECT_TRUE(four.match);
  EXPECT_EQ(four.engine, (std::vector<std::size_t>{1, 1, 1, 1, 0}));
  EXPECT_EQ(four.oracle, four.engine);
  std::mt19937 rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    auto r = verify_against_oracle(diag_exp(4, random_exponents(rng, 4, 2)), 5);
    EXPECT_TRUE(r.match) << "trial " << trial;
  }
}

TEST(Nichols, EngineEqualsSymmetrizerRanks) {
  std::mt19937 rng(51);
  std::vector<std::pair<BraidedVectorSpace, std::size_t>> cases;
  for (unsigned n : {3u, 4u, 5u, 6u}) cases.emplace_back(diag_exp(n, random_exponents(rng, n, 3)), 6);
  cases.emplace_back(rack_minus_one(field_affine_rack(4, "w")), 9);
  cases.emplace_back(rack_minus_one(field_affine_rack(5, "2")), 7);
  cases.emplace_back(rack_minus_one(conjugacy_class_rack(sym(4), P("(1 2)"))), 7);
  Rack x = abelian_rack(2);
  RackCocycle q;
  q.components = {ElementSet{0, 1}};
  q.degrees = {2};
  CycloMatrix m{{CycloNumber(-1), CycloNumber(1)}, {CycloNumber(0), CycloNumber(-1)}};
  q.values = {{m, m}, {m, m}};
  cases.emplace_back(BraidedVectorSpace::rack_type(x, q), 5);
  for (const auto& [v, n] : cases) {
    auto r = verify_against_oracle(v, n);
    EXPECT_TRUE(r.match) << "dim " << v.dim();
  }
}

TEST(Nichols, TwistEquivalentDiagonalsAgree) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const unsigned n = std::uniform_int_distribution<unsigned>(3, 6)(rng);
    auto e = random_exponents(rng, n, 3);
    auto f = e;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        const long s = std::uniform_int_distribution<long>(0, n - 1)(rng);
        f[i][j] = (e[i][j] + s) % n;
        f[j][i] = (e[j][i] + n - s) % n;
      }
    auto v = diag_exp(n, e), w = diag_exp(n, f);
    EXPECT_EQ(dims_of(v, 6), dims_of(w, 6));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) EXPECT_EQ(cartan_coefficient(v, i, j, 6), cartan_coefficient(w, i, j, 6));
  }
}

TEST(Nichols, CompletedSeriesStayZero) {
  auto t = hilbert_series(diag_exp(4, {{2, 1}, {3, 2}}));
  ASSERT_TRUE(t.completed);
  auto r = verify_against_oracle(diag_exp(4, {{2, 1}, {3, 2}}), t.dims.size() + 1);
  EXPECT_TRUE(r.match);
  EXPECT_EQ(r.oracle[t.dims.size()], 0u);
  EXPECT_EQ(r.oracle[t.dims.size() + 1], 0u);
}

TEST(Nichols, Palindromes) {
  EXPECT_TRUE(is_palindromic({1, 3, 4, 3, 1}));
  EXPECT_TRUE(is_palindromic({1}));
  EXPECT_FALSE(is_palindromic({1, 2, 2}));
}

TEST(Nichols, ThreadsDoNotChangeResults) {
  auto v = rack_minus_one(conjugacy_class_rack(sym(4), P("(1 2)")));
  EngineOptions a, b;
  a.relations = b.relations = true;
  b.threads = 4;
  auto x = hilbert_series(v, a), y = hilbert_series(v, b);
  EXPECT_EQ(x.dims, y.dims);
  EXPECT_EQ(x.new_relations, y.new_relations);
  for (std::size_t n = 0; n < x.degrees.size(); ++n) EXPECT_EQ(x.degrees[n].words, y.degrees[n].words);
}
