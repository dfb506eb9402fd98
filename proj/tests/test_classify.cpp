#include <gtest/gtest.h>

#include <random>

#include "nichols/classify.hpp"

using namespace nichols;

namespace {

const IntMatrix kA2 = {{2, -1}, {-1, 2}};
const IntMatrix kA1A1 = {{2, 0}, {0, 2}};

YDDatumDiagonal a2_order3() { return {{{3, 3}}, {{1, 0}, {0, 1}}, {{1, 1}, {1, 1}}}; }

// Over Z_N^theta with g_i = e_i and q_ij = zeta_N^{e[i][j]}.
YDDatumDiagonal from_exponents(unsigned n, const std::vector<std::vector<long>>& e) {
  const std::size_t t = e.size();
  YDDatumDiagonal d{{std::vector<unsigned>(t, n)}, {}, {}};
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<unsigned> g(t, 0), chi(t, 0);
    g[i] = 1;
    for (std::size_t k = 0; k < t; ++k) chi[k] = static_cast<unsigned>(((e[k][i] % n) + n) % n);
    d.g.push_back(g);
    d.chi.push_back(chi);
  }
  return d;
}

// Exponents with q_ii = zeta^{s_i}, q_ij = zeta^{s_i a_ij} (i < j), q_ji = 1.
std::vector<std::vector<long>> symmetrized(const IntMatrix& a, const std::vector<long>& s) {
  std::vector<std::vector<long>> e(a.size(), std::vector<long>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    e[i][i] = s[i];
    for (std::size_t j = i + 1; j < a.size(); ++j) e[i][j] = s[i] * a[i][j];
  }
  return e;
}

}  // namespace

TEST(Classify, CartanDatumA2) {
  auto c = validate_cartan_datum(a2_order3(), kA2);
  EXPECT_TRUE(c.report.ok());
  EXPECT_EQ(c.components, (std::vector<std::vector<std::size_t>>{{0, 1}}));
  EXPECT_EQ(c.n, (std::vector<unsigned>{3}));
}

TEST(Classify, CartanDatumFalsifiedEntry) {
  auto c = validate_cartan_datum(a2_order3(), {{2, 0}, {-1, 2}});
  EXPECT_FALSE(c.report.ok());
  EXPECT_FALSE(c.report.find("compatibility")->ok);
  EXPECT_NE(c.report.find("compatibility")->detail.find("(1,2)"), std::string::npos);
}

TEST(Classify, CartanDatumA1A1) {
  YDDatumDiagonal d{{{10}}, {{5}, {2}}, {{5}, {2}}};
  auto c = validate_cartan_datum(d, kA1A1);
  EXPECT_TRUE(c.report.ok());
  EXPECT_EQ(c.components.size(), 2u);
  EXPECT_EQ(c.n, (std::vector<unsigned>{2, 5}));
}

TEST(Classify, CartanDatumClassicalFixturesAndPerturbations) {
  struct Case {
    IntMatrix a;
    std::vector<long> s;
  };
  const std::vector<Case> cases = {{kA2, {1, 1}},
                                   {kA1A1, {2, 3}},
                                   {{{2, -2}, {-1, 2}}, {1, 2}},
                                   {{{2, -1}, {-3, 2}}, {3, 1}},
                                   {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {2, 2, 2}},
                                   {{{2, -1, 0}, {-2, 2, -1}, {0, -1, 2}}, {2, 1, 1}}};
  std::mt19937 rng(13);
  for (const auto& c : cases) {
    auto e = symmetrized(c.a, c.s);
    ASSERT_TRUE(validate_cartan_datum(from_exponents(7, e), c.a).report.ok());
    for (int trial = 0; trial < 20; ++trial) {
      auto bad = e;
      std::size_t i = rng() % c.a.size(), j = rng() % c.a.size();
      if (i == j) j = (i + 1) % c.a.size();
      bad[i][j] += 1 + rng() % 6;
      auto rep = validate_cartan_datum(from_exponents(7, bad), c.a).report;
      EXPECT_FALSE(rep.ok());
      EXPECT_FALSE(rep.find("compatibility")->ok);
    }
  }
}

TEST(Classify, CartanDatumRejectsNonFinite) {
  EXPECT_FALSE(validate_cartan_datum(a2_order3(), {{2, -2}, {-2, 2}}).report.find("cartan matrix")->ok);
  EXPECT_FALSE(validate_cartan_datum(a2_order3(), {{2}}).report.find("shape")->ok);
}

TEST(Classify, CartanLiftingLambda) {
  // chi_1 chi_2 != e forces lambda_12 = 0.
  YDDatumDiagonal d{{{10}}, {{5}, {2}}, {{5}, {2}}};
  CartanLiftingParams p{{{{0, 1}, 1}}, {CycloNumber(0), CycloNumber(0)}};
  EXPECT_FALSE(validate_lifting_params_cartan(d, kA1A1, p).find("lambda vanishing")->ok);
  p.lambda[{0, 1}] = 0;
  EXPECT_TRUE(validate_lifting_params_cartan(d, kA1A1, p).ok());

  // Z_2 x Z_2, all q_ij = -1, chi_1 chi_2 = e and g_1 g_2 != 1.
  YDDatumDiagonal book{{{2, 2}}, {{1, 0}, {0, 1}}, {{1, 1}, {1, 1}}};
  CartanLiftingParams ok{{{{0, 1}, 1}}, {CycloNumber(0), CycloNumber(0)}};
  EXPECT_TRUE(validate_lifting_params_cartan(book, kA1A1, ok).ok());
  ok.lambda = {{{0, 1}, 2}};
  EXPECT_FALSE(validate_lifting_params_cartan(book, kA1A1, ok).find("lambda domain")->ok);
  // Linked pair.
  CartanLiftingParams linked{{{{0, 1}, 0}}, std::vector<CycloNumber>(3, CycloNumber(0))};
  EXPECT_FALSE(validate_lifting_params_cartan(a2_order3(), kA2, linked).find("lambda domain")->ok);
}

TEST(Classify, CartanLiftingMu) {
  // Gamma = Z_4, g = 1, chi = 2: q = -1, g^2 != 1, chi^2 = e.
  YDDatumDiagonal d{{{4}}, {{1}}, {{2}}};
  EXPECT_TRUE(validate_lifting_params_cartan(d, {{2}}, {{}, {CycloNumber(1)}}).ok());
  // Gamma = Z_2: g^2 = 1.
  YDDatumDiagonal sweedler{{{2}}, {{1}}, {{1}}};
  EXPECT_FALSE(validate_lifting_params_cartan(sweedler, {{2}}, {{}, {CycloNumber(1)}}).find("mu vanishing")->ok);
  EXPECT_TRUE(validate_lifting_params_cartan(sweedler, {{2}}, {{}, {CycloNumber(0)}}).ok());
  EXPECT_FALSE(validate_lifting_params_cartan(d, {{2}}, {{}, {}}).find("mu length")->ok);
  // A_2 over Z_3 x Z_3: every root has g_alpha^3 = 1.
  CartanLiftingParams mu{{}, {CycloNumber(0), CycloNumber(0), CycloNumber(1)}};
  EXPECT_FALSE(validate_lifting_params_cartan(a2_order3(), kA2, mu).find("mu vanishing")->ok);
}

TEST(Classify, KindNames) {
  for (auto k : all_lifting_kinds()) EXPECT_EQ(parse_lifting_kind(to_string(k)), k);
  EXPECT_THROW(parse_lifting_kind("O5_2"), InputError);
}

TEST(Classify, LiftingDimensions) {
  EXPECT_EQ(lifting_dimension(LiftingKind::O3_2), 12u);
  EXPECT_EQ(lifting_dimension(LiftingKind::O4_2), 576u);
  EXPECT_EQ(lifting_dimension(LiftingKind::X4w), 72u);
  EXPECT_EQ(lifting_dimension(LiftingKind::X5_2), 1280u);
  EXPECT_EQ(lifting_dimension(LiftingKind::X5_3), 1280u);
}

TEST(Classify, StandardDataAreValid) {
  for (auto k : all_lifting_kinds()) {
    auto d = standard_lifting_datum(k);
    EXPECT_TRUE(validate_yd_rack_datum(d).ok()) << to_string(k);
    auto rep = validate_lifting_params_rack(k, d, std::vector<CycloNumber>(lifting_parameter_count(k), CycloNumber(0)));
    EXPECT_TRUE(rep.ok()) << to_string(k);
  }
}

TEST(Classify, RackLiftingO32) {
  auto d = standard_lifting_datum(LiftingKind::O3_2);
  EXPECT_TRUE(validate_lifting_params_rack(LiftingKind::O3_2, d, {CycloNumber(0), CycloNumber(1)}).ok());
  auto rep = validate_lifting_params_rack(LiftingKind::O3_2, d, {CycloNumber(1), CycloNumber(0)});
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.find("lambda_1 = 0 if g_(1 2)^2 = 1")->ok);
  EXPECT_FALSE(validate_lifting_params_rack(LiftingKind::O3_2, d, {CycloNumber(0)}).find("parameter count")->ok);
}

TEST(Classify, RackLiftingO32ChiSquareNontrivial) {
  // S_3 x Z_4 on {1,2,3} u {4,5,6,7}; chi = sign on S_3 times i on the generator of Z_4.
  PermGroup g({Permutation::parse_cycles("(1 2)"), Permutation::parse_cycles("(1 2 3)"),
               Permutation::parse_cycles("(4 5 6 7)")});
  const Rack x = lifting_rack(LiftingKind::O3_2);
  std::vector<CycloNumber> chi;
  for (const auto& h : g.elements()) {
    const long k = (static_cast<long>(h(3)) - 3 + 4) % 4;
    const int s3 = h.sign() * (k % 2 ? -1 : 1);
    chi.push_back(CycloNumber(s3) * CycloNumber::root_of_unity(4, k));
  }
  auto d = YDDatumRack::conjugation(x, g, std::vector<std::vector<CycloNumber>>(3, std::vector<CycloNumber>(3, CycloNumber(-1))), chi);
  ASSERT_TRUE(validate_yd_rack_datum(d).ok());
  auto rep = validate_lifting_params_rack(LiftingKind::O3_2, d, {CycloNumber(1), CycloNumber(0)});
  EXPECT_FALSE(rep.find("lambda_1 = 0 if chi^2 != e")->ok);
  rep = validate_lifting_params_rack(LiftingKind::O3_2, d, {CycloNumber(0), CycloNumber(1)});
  EXPECT_FALSE(rep.find("lambda_2 = 0 if chi^2 != e")->ok);
  EXPECT_TRUE(validate_lifting_params_rack(LiftingKind::O3_2, d, {CycloNumber(0), CycloNumber(0)}).ok());
}

TEST(Classify, RackLiftingO42) {
  auto d = standard_lifting_datum(LiftingKind::O4_2);
  const CycloNumber o(0), l(1);
  EXPECT_TRUE(validate_lifting_params_rack(LiftingKind::O4_2, d, {o, l, l}).ok());
  EXPECT_FALSE(validate_lifting_params_rack(LiftingKind::O4_2, d, {l, o, o}).ok());
}

TEST(Classify, RackLiftingAffineProducts) {
  // phi_i(x) = a x + (1 - a) i; the words below multiply to the identity on X
  // and have even length, so they vanish in Inn(X) x Z_2.
  const CycloNumber o(0), l(1);
  auto x4 = standard_lifting_datum(LiftingKind::X4w);
  EXPECT_TRUE(validate_lifting_params_rack(LiftingKind::X4w, x4, {l, l, o}).ok());
  EXPECT_FALSE(validate_lifting_params_rack(LiftingKind::X4w, x4, {o, o, l}).find("lambda_3 = 0 if g_0^3 g_1^3 = 1")->ok);
  auto x52 = standard_lifting_datum(LiftingKind::X5_2);
  EXPECT_TRUE(validate_lifting_params_rack(LiftingKind::X5_2, x52, {l, l, o}).ok());
  EXPECT_FALSE(validate_lifting_params_rack(LiftingKind::X5_2, x52, {o, o, l}).ok());
  auto x53 = standard_lifting_datum(LiftingKind::X5_3);
  EXPECT_TRUE(validate_lifting_params_rack(LiftingKind::X5_3, x53, {l, l, o}).ok());
  EXPECT_FALSE(validate_lifting_params_rack(LiftingKind::X5_3, x53, {o, o, l}).ok());
}

TEST(Classify, RackLiftingRejectsWrongRack) {
  auto d = standard_lifting_datum(LiftingKind::X5_2);
  EXPECT_FALSE(validate_lifting_params_rack(LiftingKind::X5_3, d, {CycloNumber(0), CycloNumber(0), CycloNumber(0)})
                   .find("datum")
                   ->ok);
  EXPECT_FALSE(validate_lifting_params_rack(LiftingKind::O3_2, d, {CycloNumber(0), CycloNumber(0)}).ok());
}

TEST(Classify, MultiplierConsistency) {
  for (auto k : all_lifting_kinds()) {
    auto m = lifting_multiplier_consistency(k, {}, 2);
    EXPECT_TRUE(m.consistent) << to_string(k) << ": " << m.engine.get_str();
    EXPECT_EQ(m.engine, lifting_dimension(k));
  }
  Budget tiny{600.0, 10};
  EXPECT_THROW(lifting_multiplier_consistency(LiftingKind::O4_2, tiny), BudgetExceeded);
}
