#include <gtest/gtest.h>

#include <random>

#include "nichols/errors.hpp"
#include "nichols/superreflect.hpp"

using namespace nichols;

namespace {

FieldMatrix fm(const IntMatrix& m) {
  FieldMatrix out;
  for (const auto& row : m) {
    out.emplace_back();
    for (long v : row) out.back().emplace_back(v);
  }
  return out;
}

SuperDatum datum(const IntMatrix& a, std::vector<int> p, const IntMatrix& c, SuperField f = {}) {
  SuperDatum d{f, fm(a), std::move(p), c};
  d.validate();
  return d;
}

const IntMatrix kA2 = {{2, -1}, {-1, 2}};
const IntMatrix kB2 = {{2, -2}, {-1, 2}};
const IntMatrix kG2 = {{2, -1}, {-3, 2}};
const IntMatrix kA3 = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};

// sl(2|1) with an odd isotropic simple root.
SuperDatum sl21() { return datum({{0, 1}, {-1, 2}}, {1, 0}, kA2); }

}  // namespace

TEST(SuperReflect, DSequenceExamples) {
  auto d = datum(kA2, {0, 0}, kA2);
  EXPECT_EQ(d_sequence(d, 0, 1, 3), (std::vector<mpq_class>{-1, 0, 3}));

  auto odd = datum({{0, 1}, {-1, 2}}, {1, 0}, kA2);
  auto ds = d_sequence(odd, 0, 1, 8);
  for (std::size_t m = 2; m <= 8; m += 2) EXPECT_EQ(ds[m - 1], 0);
  for (std::size_t m = 1; m <= 8; m += 2) EXPECT_EQ(ds[m - 1], 1);

  auto zero = datum({{0, 0}, {0, 0}}, {0, 0}, {{2, 0}, {0, 2}});
  for (const auto& v : d_sequence(zero, 0, 1, 6)) EXPECT_EQ(v, 0);
  EXPECT_THROW(d_sequence(zero, 0, 0, 3), InputError);
}

TEST(SuperReflect, DSequenceMatchesClosedForms) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> e(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const long aii = e(rng), aij = e(rng);
    const long aji = aij == 0 ? 0 : (e(rng) == 0 ? 1 : e(rng) | 1);
    for (int pi : {0, 1}) {
      auto d = datum({{aii, aij}, {aji, 2}}, {pi, 0}, {{2, -1}, {-1, 2}});
      auto ds = d_sequence(d, 0, 1, 7);
      for (long m = 1; m <= 7; ++m) {
        mpq_class want = pi == 0 ? mpq_class(m * aij + m * (m - 1) / 2 * aii)
                                 : mpq_class(m / 2 * aii + (m % 2 ? aij : 0));
        EXPECT_EQ(ds[m - 1], want);
      }
    }
  }
}

TEST(SuperReflect, NuMuExamples) {
  auto d = datum(kB2, {0, 0}, kB2);
  EXPECT_EQ(nu_mu(d, 0, 1, 0), (std::pair<mpq_class, mpq_class>{1, 0}));
  // Even: nu = prod d_t, mu = n (prod_{t>=2} d_t) a_ji.
  auto ds = d_sequence(d, 0, 1, 4);
  for (std::size_t n = 1; n <= 4; ++n) {
    mpq_class prod = 1, tail = 1;
    for (std::size_t t = 1; t <= n; ++t) prod *= ds[t - 1];
    for (std::size_t t = 2; t <= n; ++t) tail *= ds[t - 1];
    auto [nu, mu] = nu_mu(d, 0, 1, n);
    EXPECT_EQ(nu, prod);
    EXPECT_EQ(mu, mpq_class(n) * tail * d.a[1][0]);
  }
  auto odd = sl21();
  auto [nu, mu] = nu_mu(odd, 0, 1, 1);
  EXPECT_EQ(nu, odd.a[0][1]);
  EXPECT_EQ(mu, odd.a[1][0]);
}

TEST(SuperReflect, NuMuSigns) {
  // p_i = p_j = 1: factor t carries (-1)^{(t-1)+1}.
  auto d = datum({{2, -1}, {-1, 2}}, {1, 1}, kA2);
  auto ds = d_sequence(d, 0, 1, 3);
  auto [nu, mu] = nu_mu(d, 0, 1, 3);
  EXPECT_EQ(nu, -ds[0] * ds[1] * -ds[2]);
  EXPECT_EQ(mu, -3 * ds[1] * -ds[2] * d.a[1][0]);
}

TEST(SuperReflect, ReflectSl3) {
  auto r = reflect_super(datum(kA2, {0, 0}, kA2), 0);
  EXPECT_EQ(r.a[0][0], 2);
  EXPECT_EQ(r.a[0][1], -1);
  EXPECT_EQ(r.a[1][1], -2);
  EXPECT_EQ(r.a[1][0], 1);
  EXPECT_EQ(r.p, (std::vector<int>{0, 0}));
  EXPECT_TRUE(row_equivalent(r, datum(kA2, {0, 0}, kA2)));
  EXPECT_FALSE(r == datum(kA2, {0, 0}, kA2));
}

TEST(SuperReflect, ParityFlip) {
  auto r = reflect_super(sl21(), 0);
  EXPECT_EQ(r.p, (std::vector<int>{1, 1}));
  EXPECT_EQ(r.a, fm({{0, -1}, {1, 0}}));
  EXPECT_EQ(reflect_super(r, 0), sl21());
}

TEST(SuperReflect, DiagonalEntryAndParityInvolution) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> e(-4, 4), c(-3, 0);
  int done = 0;
  while (done < 200) {
    IntMatrix a(3, std::vector<long>(3)), cm(3, std::vector<long>(3, 2));
    std::vector<int> p(3);
    for (std::size_t j = 0; j < 3; ++j) {
      p[j] = rng() % 2;
      for (std::size_t k = 0; k < 3; ++k) {
        a[j][k] = e(rng);
        if (j != k) cm[j][k] = c(rng);
      }
    }
    bool ok = true;
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) ok &= j == k || (a[j][k] == 0) == (a[k][j] == 0);
    if (!ok) continue;
    auto d = datum(a, p, cm);
    for (std::size_t i = 0; i < 3; ++i) {
      auto r = reflect_super(d, i);
      EXPECT_EQ(r.a[i][i], d.a[i][i]);
      EXPECT_EQ(r.p[i], d.p[i]);
      EXPECT_EQ(reflect_super(r, i).p, d.p);
    }
    ++done;
  }
}

TEST(SuperReflect, HeuristicCartan) {
  for (const auto& a : {kA2, kB2, kG2, kA3}) {
    auto d = datum(a, std::vector<int>(a.size(), 0), a);
    EXPECT_EQ(heuristic_cartan(d), a);
  }
  EXPECT_EQ(heuristic_cartan(sl21()), kA2);
  // a_ii = 0 even with a_ij != 0: d_m = m a_ij never vanishes.
  auto bad = datum({{0, 1}, {1, 2}}, {0, 0}, kA2);
  EXPECT_FALSE(heuristic_cartan_entry(bad, 0, 1, 10));
  EXPECT_THROW(heuristic_cartan(bad, 10), InputError);
}

TEST(SuperReflect, EvenCartanOrbitIsOnePoint) {
  for (const auto& a : {kA2, kB2, kG2, kA3}) {
    auto orbit = super_orbit(datum(a, std::vector<int>(a.size(), 0), a));
    EXPECT_EQ(orbit.points.size(), 1u);
    EXPECT_NO_THROW(orbit.basic.validate());
    auto roots = real_root_closure(orbit.basic, orbit.cartan);
    ASSERT_TRUE(roots.finite);
    EXPECT_EQ(positive_part(roots.roots[0]), *classical_positive_roots(a));
  }
}

TEST(SuperReflect, RankOneOrbit) {
  for (int p : {0, 1}) {
    auto orbit = super_orbit(datum({{2}}, {p}, {{2}}));
    EXPECT_EQ(orbit.points.size(), 1u);
    EXPECT_TRUE(orbit.raw_involutive);
  }
}

TEST(SuperReflect, Sl21Orbit) {
  // One point per position of the odd simple root, plus the all-odd diagram.
  auto orbit = super_orbit(sl21());
  EXPECT_EQ(orbit.points.size(), 3u);
  EXPECT_NO_THROW(orbit.basic.validate());
  EXPECT_EQ(orbit.basic.rho[0][0], 1u);
  EXPECT_EQ(orbit.basic.rho[1][0], 0u);
  auto roots = real_root_closure(orbit.basic, orbit.cartan);
  ASSERT_TRUE(roots.finite);
  for (const auto& d : roots.roots) EXPECT_EQ(positive_part(d).size(), 3u);
  GRSDatum grs{orbit.basic, orbit.cartan, roots.roots};
  EXPECT_TRUE(check_grs_axioms(grs).ok());
}

TEST(SuperReflect, Sl13Orbit) {
  for (auto update : {CartanUpdate::carry, CartanUpdate::heuristic}) {
    auto orbit = super_orbit(datum({{0, 1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 0, 0}, kA3), 1000, update);
    EXPECT_EQ(orbit.points.size(), 4u);
    EXPECT_NO_THROW(orbit.basic.validate());
    for (const auto& c : orbit.cartan) EXPECT_EQ(c, kA3);
    auto roots = real_root_closure(orbit.basic, orbit.cartan);
    ASSERT_TRUE(roots.finite);
    EXPECT_TRUE(check_grs_axioms({orbit.basic, orbit.cartan, roots.roots}).ok());
  }
}

TEST(SuperReflect, FiniteField) {
  auto f = SuperField::parse("Fp:5");
  EXPECT_EQ(f.p, 5u);
  auto d = datum({{0, 1}, {-1, 2}}, {1, 0}, kA2, f);
  EXPECT_EQ(d.a[1][0], 4);
  auto orbit = super_orbit(d);
  EXPECT_EQ(orbit.points.size(), 3u);
  EXPECT_EQ(f.normalize(mpq_class(1, 2)), 3);
  EXPECT_THROW(f.normalize(mpq_class(1, 5)), DivisionByZero);
  EXPECT_THROW(SuperField::parse("Fp:4"), InputError);
  EXPECT_THROW(SuperField::parse("Fp:2"), InputError);
  EXPECT_THROW(SuperField::parse("R"), InputError);
  EXPECT_EQ(SuperField::parse("Q").to_string(), "Q");
}

TEST(SuperReflect, ValidateRejects) {
  EXPECT_THROW(datum({{2, 0}, {-1, 2}}, {0, 0}, kA2), InputError);
  EXPECT_THROW(datum(kA2, {0, 2}, kA2), InputError);
  EXPECT_THROW(datum(kA2, {0}, kA2), InputError);
  EXPECT_THROW(datum(kA2, {0, 0}, {{2, 1}, {-1, 2}}), InputError);
  EXPECT_THROW(datum(kA2, {0, 0}, {{1, -1}, {-1, 2}}), InputError);
}

TEST(SuperReflect, OrbitCap) {
  EXPECT_THROW(super_orbit(datum({{0, 1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 0, 0}, kA3), 2), BudgetExceeded);
}
