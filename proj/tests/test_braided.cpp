#include <gtest/gtest.h>

#include <random>

#include "nichols/braided.hpp"
#include "nichols/errors.hpp"

using namespace nichols;

namespace {

Permutation P(const char* s) { return Permutation::parse_cycles(s); }

PermGroup sym(unsigned n) {
  std::string cyc = "(";
  for (unsigned i = 1; i <= n; ++i) cyc += (i > 1 ? " " : "") + std::to_string(i);
  return PermGroup({P("(1 2)"), Permutation::parse_cycles(cyc + ")")});
}

Rack transpositions(unsigned n) { return conjugacy_class_rack(sym(n), P("(1 2)")); }

CycloNumber z(unsigned n, long k) { return CycloNumber::root_of_unity(n, k); }

std::vector<CycloNumber> sign_character(const PermGroup& g) {
  std::vector<CycloNumber> out;
  for (const auto& h : g.elements()) out.push_back(CycloNumber(h.sign()));
  return out;
}

}  // namespace

TEST(Braided, DiagonalBraidingApply) {
  auto v = BraidedVectorSpace::diagonal(DiagonalBraiding{{{CycloNumber(-1), z(3, 1)}, {z(3, 2), CycloNumber(-1)}}});
  auto t = braiding_apply(v, 0, 1);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].left, 1u);
  EXPECT_EQ(t[0].right, 0u);
  EXPECT_EQ(t[0].coef, z(3, 1));
  auto s = braiding_apply(v, 0, 0);
  EXPECT_EQ(s[0].coef, CycloNumber(-1));
  EXPECT_THROW(braiding_apply(v, 0, 2), InputError);
}

TEST(Braided, RackBraidingApply) {
  Rack x = transpositions(3);
  auto v = BraidedVectorSpace::rack_type(x, RackCocycle::constant(x, CycloNumber(-1)));
  const auto a = *x.find("(1 2)"), b = *x.find("(1 3)"), c = *x.find("(2 3)");
  auto t = braiding_apply(v, a, b);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].left, c);
  EXPECT_EQ(t[0].right, a);
  EXPECT_EQ(t[0].coef, CycloNumber(-1));
}

TEST(Braided, DiagonalFromExponents) {
  auto d = DiagonalBraiding::from_exponents(6, {{3, 1}, {5, 2}});
  EXPECT_EQ(d.q[0][0], CycloNumber(-1));
  EXPECT_EQ(d.q[1][1], z(3, 1));
  EXPECT_THROW(DiagonalBraiding::from_exponents(0, {{1}}), InputError);
  EXPECT_THROW(DiagonalBraiding::from_exponents(3, {{1, 2}}), InputError);
  EXPECT_THROW(BraidedVectorSpace::diagonal(DiagonalBraiding{{{CycloNumber(2)}}}), InputError);
}

TEST(Braided, BraidEquationDiagonal) {
  std::mt19937 rng(5);
  for (int t = 0; t < 5; ++t) {
    std::vector<std::vector<long>> e(3, std::vector<long>(3));
    for (auto& row : e)
      for (auto& v : row) v = rng() % 12;
    EXPECT_TRUE(check_braid_equation(BraidedVectorSpace::diagonal(DiagonalBraiding::from_exponents(12, e))).ok);
  }
}

TEST(Braided, BraidEquationRack) {
  Rack x = transpositions(3);
  EXPECT_TRUE(check_braid_equation(BraidedVectorSpace::rack_type(x, RackCocycle::constant(x, CycloNumber(-1)))).ok);
  auto chi = RackCocycle::transposition_sign(x);
  EXPECT_TRUE(check_cocycle(x, chi).ok);
  EXPECT_TRUE(check_braid_equation(BraidedVectorSpace::rack_type(x, chi)).ok);
  Rack x4 = transpositions(4);
  auto chi4 = RackCocycle::transposition_sign(x4);
  EXPECT_TRUE(check_cocycle(x4, chi4).ok);
  EXPECT_TRUE(check_braid_equation(BraidedVectorSpace::rack_type(x4, chi4)).ok);
}

TEST(Braided, CorruptedCocycleIsDetected) {
  Rack x = transpositions(3);
  auto q = RackCocycle::constant(x, CycloNumber(-1));
  q.values[0][1][0][0] = CycloNumber(1);
  auto chk = check_cocycle(x, q);
  EXPECT_FALSE(chk.ok);
  EXPECT_EQ(chk.instance.size(), 3u);
  EXPECT_FALSE(check_braid_equation(BraidedVectorSpace::rack_type(x, q)).ok);
}

TEST(Braided, ConstantCocyclesAreCocycles) {
  for (const auto& x : {transpositions(3), field_affine_rack(5, "2"), field_affine_rack(4, "w"), abelian_rack(3)})
    for (const auto& c : {CycloNumber(-1), z(3, 1), z(5, 2)}) {
      auto q = RackCocycle::constant(x, c);
      EXPECT_TRUE(check_cocycle(x, q).ok);
      EXPECT_TRUE(check_braid_equation(BraidedVectorSpace::rack_type(x, q)).ok);
    }
}

// For principal scalar cocycles the braid equation is equivalent to the
// cocycle identity; random sign tables exercise both directions.
TEST(Braided, BraidEquationMatchesCocycleIdentity) {
  std::mt19937 rng(99);
  const std::vector<Rack> racks = {transpositions(3), field_affine_rack(4, "w")};
  int passes = 0, fails = 0;
  for (const auto& x : racks)
    for (int t = 0; t < 40; ++t) {
      std::vector<std::vector<CycloNumber>> table(x.size(), std::vector<CycloNumber>(x.size()));
      for (auto& row : table)
        for (auto& v : row) v = (rng() % 2) ? CycloNumber(1) : CycloNumber(-1);
      auto q = RackCocycle::scalar(x, table);
      const bool cocycle = check_cocycle(x, q).ok;
      EXPECT_EQ(cocycle, check_braid_equation(BraidedVectorSpace::rack_type(x, q)).ok);
      (cocycle ? passes : fails)++;
    }
  EXPECT_GT(fails, 0);
}

TEST(Braided, MatrixCocycle) {
  Rack x = transpositions(3);
  RackCocycle q;
  q.components = {{0, 1, 2}};
  q.degrees = {2};
  const CycloMatrix m = {{CycloNumber(0), CycloNumber(1)}, {CycloNumber(1), CycloNumber(0)}};
  q.values.assign(3, std::vector<CycloMatrix>(3, m));
  EXPECT_TRUE(check_cocycle(x, q).ok);
  auto v = BraidedVectorSpace::rack_type(x, q);
  EXPECT_EQ(v.dim(), 6u);
  EXPECT_TRUE(check_braid_equation(v).ok);
  EXPECT_FALSE(determinant(v.braiding_matrix()).is_zero());
  // A non-commuting pair of matrix values breaks the identity.
  q.values[0][1] = {{CycloNumber(1), CycloNumber(1)}, {CycloNumber(0), CycloNumber(1)}};
  EXPECT_FALSE(check_cocycle(x, q).ok);
  EXPECT_FALSE(check_braid_equation(BraidedVectorSpace::rack_type(x, q)).ok);
}

TEST(Braided, DecompositionCondition) {
  Rack x = disjoint_union(transpositions(3), abelian_rack(1));
  RackCocycle q = RackCocycle::constant(x, CycloNumber(-1));
  q.components = {{0, 1, 2}, {3}};
  q.degrees = {1, 1};
  EXPECT_TRUE(check_cocycle(x, q).ok);
  q.components = {{0, 1}, {2, 3}};
  EXPECT_FALSE(check_cocycle(x, q).ok);
}

TEST(Braided, BraidingMatrixInvertible) {
  Rack x = transpositions(3);
  EXPECT_FALSE(determinant(BraidedVectorSpace::rack_type(x, RackCocycle::constant(x, CycloNumber(-1)))
                               .braiding_matrix())
                   .is_zero());
  auto d = BraidedVectorSpace::diagonal(DiagonalBraiding::from_exponents(5, {{1, 2}, {3, 4}}));
  EXPECT_FALSE(determinant(d.braiding_matrix()).is_zero());
}

TEST(Braided, GradingIsPreservedByBraiding) {
  Rack x = field_affine_rack(5, "2");
  std::vector<BraidedVectorSpace> spaces = {
      BraidedVectorSpace::rack_type(x, RackCocycle::constant(x, CycloNumber(-1))),
      BraidedVectorSpace::rack_type(transpositions(4), RackCocycle::constant(transpositions(4), CycloNumber(-1))),
      BraidedVectorSpace::diagonal(DiagonalBraiding::from_exponents(4, {{2, 1}, {1, 2}}))};
  for (const auto& v : spaces) {
    Grading g(v);
    for (std::uint32_t a = 0; a < v.dim(); ++a)
      for (std::uint32_t b = 0; b < v.dim(); ++b)
        for (const auto& t : v.terms(a, b)) EXPECT_EQ(g.of_word({a, b}), g.of_word({t.left, t.right}));
  }
}

TEST(Braided, RealizeExamples) {
  const CycloNumber m1(-1);
  auto sols = realize_diagonal_over_group({{m1, m1}, {m1, m1}}, FiniteAbelianGroup{{2}});
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].g[0], (std::vector<unsigned>{1}));
  EXPECT_EQ(sols[0].chi[1], (std::vector<unsigned>{1}));
  EXPECT_TRUE(realize_diagonal_over_group({{m1}}, FiniteAbelianGroup{{3}}).empty());
  EXPECT_THROW(realize_diagonal_over_group({{m1, m1}, {m1, m1}}, FiniteAbelianGroup{{100}}, 1000), BudgetExceeded);
}

TEST(Braided, RealizeTrivialEntryCountsPairsWithTrivialPairing) {
  FiniteAbelianGroup g{{3}};
  auto sols = realize_diagonal_over_group({{CycloNumber(1)}}, g);
  std::size_t expected = 0;
  for (unsigned a = 0; a < 3; ++a)
    for (unsigned c = 0; c < 3; ++c)
      if (a * c % 3 == 0) ++expected;
  EXPECT_EQ(sols.size(), expected);
}

TEST(Braided, RealizeRoundTrip) {
  FiniteAbelianGroup g{{2, 4}};
  CycloMatrix q = {{CycloNumber(-1), CycloNumber(1)}, {z(4, 1), z(4, 1)}};
  auto sols = realize_diagonal_over_group(q, g);
  EXPECT_FALSE(sols.empty());
  // Independent brute-force count over all (g1, g2, chi1, chi2).
  std::size_t brute = 0;
  for (std::uint64_t a = 0; a < 8; ++a)
    for (std::uint64_t b = 0; b < 8; ++b)
      for (std::uint64_t c = 0; c < 8; ++c)
        for (std::uint64_t d = 0; d < 8; ++d) {
          auto ga = g.element(a), gb = g.element(b), ca = g.element(c), cb = g.element(d);
          if (g.character_value(ca, ga) == q[0][0] && g.character_value(cb, ga) == q[0][1] &&
              g.character_value(ca, gb) == q[1][0] && g.character_value(cb, gb) == q[1][1])
            ++brute;
        }
  EXPECT_EQ(sols.size(), brute);
  for (const auto& s : sols) EXPECT_EQ(s.braiding_matrix(), q);
}

TEST(Braided, YDRackDatumS3) {
  Rack x = transpositions(3);
  PermGroup s3 = sym(3);
  std::vector<std::vector<CycloNumber>> q(3, std::vector<CycloNumber>(3, CycloNumber(-1)));
  auto d = YDDatumRack::conjugation(x, s3, q, sign_character(s3));
  auto rep = validate_yd_rack_datum(d);
  EXPECT_TRUE(rep.ok());
  auto trivial = YDDatumRack::conjugation(x, s3, q, std::vector<CycloNumber>(6, CycloNumber(1)));
  auto rep2 = validate_yd_rack_datum(trivial);
  EXPECT_FALSE(rep2.ok());
  EXPECT_FALSE(rep2.find("braiding compatibility")->ok);
  EXPECT_TRUE(rep2.find("1-cocycle")->ok);
  auto bad = d;
  std::swap(bad.g[0], bad.g[1]);
  auto rep3 = validate_yd_rack_datum(bad);
  EXPECT_FALSE(rep3.find("equivariance")->ok);
}

TEST(Braided, YDRackDatumFailingCocycle) {
  Rack x = transpositions(3);
  PermGroup s3 = sym(3);
  std::vector<std::vector<CycloNumber>> q(3, std::vector<CycloNumber>(3, CycloNumber(-1)));
  auto d = YDDatumRack::conjugation(x, s3, q, sign_character(s3));
  d.chi[0][1] = -d.chi[0][1];
  EXPECT_FALSE(validate_yd_rack_datum(d).find("1-cocycle")->ok);
}
