#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "knot_oracles.hpp"
#include "knotloc/error.hpp"
#include "knotloc/isogeny.hpp"
#include "knotloc/seifert.hpp"

using namespace knotloc;

namespace {

LaurentPoly P(const char* s) { return parse_poly(s); }

// P V P^T for a random product of elementary integer row operations.
SeifertMatrix congruent(const SeifertMatrix& V, std::mt19937_64& rng) {
  const std::size_t n = V.size();
  IntMatrix Pm(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) Pm[i][i] = 1;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> c(-2, 2);
  for (int step = 0; step < 4; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const long a = c(rng);
    for (std::size_t k = 0; k < n; ++k) Pm[i][k] += a * Pm[j][k];
  }
  IntMatrix out(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out[i][j] += Pm[i][k] * V.at(k, l) * Pm[j][l];
  return SeifertMatrix(out);
}

// Elementary enlargement: rows (V xi 0), (0 0 1), (0 0 0).
SeifertMatrix enlarged(const SeifertMatrix& V, std::mt19937_64& rng) {
  const std::size_t n = V.size();
  std::uniform_int_distribution<long> c(-2, 2);
  IntMatrix out(n + 2, std::vector<long>(n + 2, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = V.at(i, j);
    out[i][n] = c(rng);
  }
  out[n][n + 1] = 1;
  return SeifertMatrix(out);
}

}  // namespace

TEST(SeifertMatrix, Validation) {
  EXPECT_THROW(SeifertMatrix(IntMatrix{{1, 2, 3}}), DomainError);
  EXPECT_THROW(SeifertMatrix(IntMatrix{{1}}), DomainError);
  EXPECT_THROW(SeifertMatrix({{1, 2}, {2, 1}}), DomainError);
  EXPECT_NO_THROW(SeifertMatrix({{-1, 1}, {0, -1}}));
  EXPECT_EQ(knots::unknot().size(), 0u);
}

TEST(Alexander, Examples) {
  EXPECT_EQ(alexander_poly(knots::right_trefoil()), P("t^2-t+1"));
  EXPECT_EQ(alexander_poly(knots::unknot()), P("1"));
  EXPECT_EQ(alexander_poly(knots::figure_eight()), P("t^2-3t+1"));
  EXPECT_EQ(alexander_poly(knots::cinquefoil()), P("t^4-t^3+t^2-t+1"));
  EXPECT_EQ(alexander_poly(knots::twisted_base()), P("2t^2-3t+2"));
  for (unsigned k = 1; k <= 12; ++k) EXPECT_EQ(alexander_poly(knots::ribbon(k)), standard_member(k)) << k;
}

TEST(Alexander, AgreesWithCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    auto V = oracle::random_seifert(rng, 1 + i % 3);
    EXPECT_TRUE(unit_equal(alexander_poly(V), oracle::alexander_by_cofactors(V)));
  }
}

TEST(Alexander, SymmetricWithUnitAugmentation) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    auto V = oracle::random_seifert(rng, 1 + i % 3);
    LaurentPoly d = alexander_poly(V);
    EXPECT_EQ(abs(augmentation(d)), 1);
    EXPECT_EQ(d, reciprocal(d));
  }
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature_at(knots::right_trefoil(), Rational(1, 2)), -2);
  EXPECT_EQ(signature_at(knots::right_trefoil(), Rational(1, 4)), 0);
  EXPECT_EQ(signature_at(knots::unknot(), Rational(1, 3)), 0);
  auto k = knots::cinquefoil();
  auto km = connected_sum(k, mirror(k));
  for (int a = 1; a < 12; ++a) {
    Rational r(a, 12);
    r.canonicalize();
    try {
      EXPECT_EQ(signature_at(km, r), 0);
    } catch (const DomainError&) {
      // a root of unity of the Alexander polynomial
    }
  }
  EXPECT_THROW(signature_at(knots::right_trefoil(), Rational(1, 3)), DomainError);
  EXPECT_THROW(signature_at(knots::right_trefoil(), Rational(1)), DomainError);
}

TEST(Signature, MatchesFloatingPointOracle) {
  std::mt19937_64 rng(13);
  const double pi = std::acos(-1.0);
  int compared = 0;
  for (int i = 0; i < 30; ++i) {
    auto V = oracle::random_seifert(rng, 1 + i % 3);
    for (int a = 1; a < 16; a += 2) {
      Rational r(a, 16);
      int exact;
      try {
        exact = signature_at(V, r);
      } catch (const DomainError&) {
        continue;
      }
      bool clear;
      int approx = oracle::float_signature(V, pi * a / 16, &clear);
      if (!clear) continue;
      EXPECT_EQ(exact, approx);
      ++compared;
    }
  }
  EXPECT_GT(compared, 150);
}

TEST(Profile, Trefoil) {
  auto p = signature_profile(knots::right_trefoil());
  ASSERT_EQ(p.jumps.size(), 1u);
  ASSERT_TRUE(p.jumps[0].theta_over_pi.has_value());
  EXPECT_EQ(*p.jumps[0].theta_over_pi, Rational(1, 3));
  ASSERT_EQ(p.arcs.size(), 2u);
  EXPECT_EQ(p.arcs[0].signature, 0);
  EXPECT_EQ(p.arcs[1].signature, -2);
}

TEST(Profile, UnknotAndDoubleTrefoil) {
  auto u = signature_profile(knots::unknot());
  EXPECT_TRUE(u.jumps.empty());
  ASSERT_EQ(u.arcs.size(), 1u);
  EXPECT_EQ(u.arcs[0].signature, 0);
  auto tt = signature_profile(connected_sum(knots::right_trefoil(), knots::right_trefoil()));
  ASSERT_EQ(tt.jumps.size(), 1u);
  EXPECT_EQ(*tt.jumps[0].theta_over_pi, Rational(1, 3));
  EXPECT_EQ(tt.arcs[1].signature, -4);
}

TEST(Profile, IrrationalJump) {
  // 2t^2-3t+2 has roots with 2cos(theta) = 3/2
  auto p = signature_profile(knots::twisted_base());
  ASSERT_EQ(p.jumps.size(), 1u);
  EXPECT_FALSE(p.jumps[0].theta_over_pi.has_value());
  EXPECT_EQ(p.jumps[0].x_lo, Rational(3, 2));
  EXPECT_EQ(p.jumps[0].x_hi, Rational(3, 2));
  EXPECT_NEAR(std::stod(jump_theta_over_pi(p.jumps[0], 15)), std::acos(0.75) / std::acos(-1.0), 1e-14);
}

TEST(Profile, Properties) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 40; ++i) {
    auto V = oracle::random_seifert(rng, 1 + i % 3);
    auto p = signature_profile(V);
    EXPECT_EQ(p.arcs.size(), p.jumps.size() + 1);
    EXPECT_EQ(p.arcs.front().signature, 0);
    for (std::size_t j = 0; j + 1 < p.jumps.size(); ++j) EXPECT_GT(p.jumps[j].x_lo, p.jumps[j + 1].x_hi);
    for (const auto& a : p.arcs) {
      EXPECT_EQ(a.signature % 2, 0);
      EXPECT_LE(std::abs(a.signature), static_cast<int>(2 * V.genus()));
    }
    for (const auto& j : p.jumps) EXPECT_TRUE(divides(j.factor, alexander_poly(V)));
  }
}

TEST(Rho0, Examples) {
  auto t = rho0(knots::right_trefoil());
  ASSERT_TRUE(t.exact.has_value());
  EXPECT_EQ(*t.exact, Rational(-4, 3));
  EXPECT_EQ(t.numeric, "-1.333333333333333333333333333333");
  EXPECT_NEAR(t.approx(), -4.0 / 3.0, 1e-12);
  EXPECT_EQ(rho0(knots::unknot()).numeric, "0.000000000000000000000000000000");
  auto m = rho0(mirror(knots::right_trefoil()));
  EXPECT_EQ(*m.exact, Rational(4, 3));
  auto j = rho0(knots::twisted_base(), 40);
  EXPECT_FALSE(j.exact.has_value());
  const double expected = -2.0 * (1.0 - std::acos(0.75) / std::acos(-1.0));
  EXPECT_NEAR(j.approx(), expected, 1e-14);
  EXPECT_EQ(j.numeric.size(), 43u);
}

TEST(Rho0, GridOracle) {
  EXPECT_NEAR(rho0(knots::right_trefoil()).approx(), oracle::grid_rho0(knots::right_trefoil(), 200000), 1e-5);
  std::mt19937_64 rng(15);
  for (int i = 0; i < 4; ++i) {
    auto V = oracle::random_seifert(rng, 1 + i % 3);
    EXPECT_NEAR(rho0(V).approx(), oracle::grid_rho0(V, 100000), 1e-3);
  }
}

TEST(Rho0, AdditiveAndOddUnderMirror) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 20; ++i) {
    auto a = oracle::random_seifert(rng, 1 + i % 2);
    auto b = oracle::random_seifert(rng, 1 + (i / 2) % 2);
    EXPECT_NEAR(rho0(connected_sum(a, b)).approx(), rho0(a).approx() + rho0(b).approx(), 1e-9);
    EXPECT_NEAR(rho0(mirror(a)).approx(), -rho0(a).approx(), 1e-9);
  }
}

TEST(Arf, Examples) {
  EXPECT_EQ(arf(knots::unknot()), 0);
  EXPECT_EQ(arf(knots::right_trefoil()), 1);
  EXPECT_EQ(arf(knots::figure_eight()), 1);
  EXPECT_EQ(arf(knots::twisted_base()), 0);
  for (unsigned k = 1; k <= 6; ++k) EXPECT_EQ(arf(knots::ribbon(k)), 0);
}

TEST(Arf, AdditiveModTwo) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    auto a = oracle::random_seifert(rng, 1 + i % 2);
    auto b = oracle::random_seifert(rng, 1 + (i / 3) % 2);
    EXPECT_EQ(arf(connected_sum(a, b)), arf(a) ^ arf(b));
  }
}

TEST(SEquivalence, InvariantsUnchanged) {
  std::mt19937_64 rng(18);
  std::vector<SeifertMatrix> ms{knots::right_trefoil(), knots::figure_eight(), knots::cinquefoil(), knots::twisted_base()};
  for (unsigned k = 1; k <= 5; ++k) ms.push_back(knots::ribbon(k));
  for (int i = 0; i < 6; ++i) ms.push_back(oracle::random_seifert(rng, 1 + i % 2));
  for (const auto& V : ms) {
    for (const SeifertMatrix& W : {congruent(V, rng), enlarged(V, rng), enlarged(congruent(V, rng), rng)}) {
      EXPECT_TRUE(unit_equal(alexander_poly(W), alexander_poly(V)));
      EXPECT_EQ(arf(W), arf(V));
      EXPECT_EQ(rho0(W, 20).numeric, rho0(V, 20).numeric);
      EXPECT_EQ(rho0(W).exact, rho0(V).exact);
    }
  }
}

TEST(SumAndMirror, Laws) {
  auto t = knots::right_trefoil();
  EXPECT_EQ(connected_sum(t, knots::unknot()), t);
  EXPECT_EQ(mirror(mirror(t)), t);
  auto f = knots::figure_eight();
  EXPECT_EQ(alexander_poly(connected_sum(t, f)), alexander_poly(t) * alexander_poly(f));
  auto p = signature_profile(mirror(knots::cinquefoil()));
  auto q = signature_profile(knots::cinquefoil());
  ASSERT_EQ(p.arcs.size(), q.arcs.size());
  for (std::size_t i = 0; i < p.arcs.size(); ++i) EXPECT_EQ(p.arcs[i].signature, -q.arcs[i].signature);
}

TEST(Export, CsvAndSvg) {
  auto p = signature_profile(knots::right_trefoil());
  EXPECT_EQ(profile_csv(p, 6), "theta_start,theta_end,signature\n0.000000,1.047198,0\n1.047198,3.141593,-2\n");
  std::string svg = profile_svg(p, "trefoil <right>");
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("&lt;right&gt;"), std::string::npos);
  EXPECT_EQ(svg, profile_svg(p, "trefoil <right>"));
}
