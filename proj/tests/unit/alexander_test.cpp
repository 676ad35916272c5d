#include <gtest/gtest.h>

#include <random>

#include "knot_oracles.hpp"
#include "knotloc/alexander.hpp"
#include "knotloc/error.hpp"
#include "knotloc/factor.hpp"
#include "knotloc/isogeny.hpp"

using namespace knotloc;
using Status = LocalizationVerdict::Status;
using Mode = LocalizationVerdict::Mode;
using Label = Submodule::Label;

namespace {

LaurentPoly P(const char* s) { return parse_poly(s); }

LaurentPoly conj(const LaurentPoly& p) { return substitute_power(p, -1); }

std::vector<LaurentPoly> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> c(-3, 3), e(-2, 2);
  std::vector<LaurentPoly> v(n);
  for (auto& x : v) x = LaurentPoly::monomial(c(rng), e(rng)) + LaurentPoly::monomial(c(rng), e(rng));
  return v;
}

}  // namespace

TEST(Module, FromKnot) {
  auto r = module_from_knot(knots::ribbon(3));
  EXPECT_EQ(r.order, standard_member(3));
  EXPECT_TRUE(r.cyclic);
  EXPECT_EQ(module_from_knot(knots::unknot()).order, P("1"));
  EXPECT_EQ(module_from_knot(knots::right_trefoil()).order, P("t^2-t+1"));
  auto tt = knots::right_trefoil();
  EXPECT_FALSE(module_from_knot(connected_sum(tt, tt)).cyclic);
  EXPECT_TRUE(module_from_knot(connected_sum(tt, knots::figure_eight())).cyclic);
  EXPECT_THROW(make_module(P("t-1")), DomainError);
  EXPECT_THROW(make_module(LaurentPoly()), DomainError);
}

TEST(Submodules, Examples) {
  auto s = proper_submodules(make_module(P("(t-2)(2t-1)")));
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].label, Label::P0);
  EXPECT_EQ(s[0].generator, P("2t^2-5t+2"));
  EXPECT_EQ(s[1].label, Label::Pplus);
  EXPECT_EQ(s[1].generator, P("t-2"));
  EXPECT_EQ(s[2].label, Label::Pminus);
  EXPECT_EQ(s[2].generator, P("2t-1"));

  auto irr = proper_submodules(make_module(P("t^2-t+1")));
  ASSERT_EQ(irr.size(), 2u);
  EXPECT_EQ(irr[0].label, Label::P0);
  EXPECT_EQ(irr[1].label, Label::Full);

  auto sq = proper_submodules(make_module(power(cyclotomic(6), 2)));
  ASSERT_EQ(sq.size(), 3u);
  for (const auto& x : sq) EXPECT_EQ(x.label, Label::Other);
  EXPECT_EQ(sq[0].generator, power(cyclotomic(6), 2));
  EXPECT_EQ(sq[1].generator, cyclotomic(6));
  EXPECT_EQ(sq[2].generator, P("1"));

  // a squarefree order outside the d*d' pattern lists its whole divisor lattice
  auto lat = proper_submodules(make_module(P("(t^2-t+1)(t^2-3t+1)")));
  EXPECT_EQ(lat.size(), 4u);
  for (const auto& x : lat) EXPECT_TRUE(divides(x.generator, P("(t^2-t+1)(t^2-3t+1)")));
}

TEST(Fractions, Canonical) {
  EXPECT_TRUE(reduce_fraction(P("t^2-1"), P("t-1")).is_zero());
  auto a = reduce_fraction(P("1"), P("2t-4"));
  EXPECT_EQ(a.denominator, P("t-2"));
  EXPECT_EQ(a.numerator, P("1/2"));
  // t^-1 = 1/2 modulo t-2
  auto b = reduce_fraction(P("t^-1"), P("t-2"));
  EXPECT_EQ(b.numerator, P("1/2"));
  EXPECT_EQ(reduce_fraction(P("t^3 + 5"), P("t^2-t+1")), reduce_fraction(P("t^3 + 5") - P("(t+7)(t^2-t+1)"), P("t^2-t+1")));
  EXPECT_THROW(reduce_fraction(P("1"), LaurentPoly()), DomainError);
}

TEST(Blanchfield, TrefoilByHand) {
  auto B = blanchfield(knots::right_trefoil());
  ASSERT_TRUE(B.generator().has_value());
  // (1-t)(t-1)/(t^2-t+1) = t/(t^2-t+1) modulo polynomials
  auto v = B.pair(P("1"), P("1"));
  EXPECT_EQ(v.numerator, P("t"));
  EXPECT_EQ(v.denominator, P("t^2-t+1"));
  EXPECT_THROW(blanchfield(knots::unknot()), DomainError);
}

TEST(Blanchfield, SesquilinearAndHermitian) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 12; ++i) {
    auto V = i < 4 ? knots::ribbon(i + 1) : oracle::random_seifert(rng, 1 + i % 2);
    if (alexander_poly(V).span() == 0) continue;
    auto B = blanchfield(V);
    for (int j = 0; j < 5; ++j) {
      auto x = random_vector(rng, V.size());
      auto y = random_vector(rng, V.size());
      auto f = random_vector(rng, 1)[0], g = random_vector(rng, 1)[0];
      auto fx = x, gy = y;
      for (auto& e : fx) e = e * f;
      for (auto& e : gy) e = e * g;
      EXPECT_EQ(B.pair(fx, gy), scale(B.pair(x, y), conj(f) * g));
      EXPECT_EQ(B.pair(y, x), conjugate(B.pair(x, y)));
      auto ty = y;
      for (auto& e : ty) e = e * LaurentPoly::variable();
      EXPECT_EQ(B.pair(x, ty), scale(B.pair(x, y), LaurentPoly::variable()));
    }
  }
}

TEST(Blanchfield, NonsingularOnGenerator) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 15; ++i) {
    auto V = oracle::random_seifert(rng, 1 + i % 2);
    auto M = module_from_knot(V);
    if (M.order.span() == 0 || !M.cyclic) continue;
    auto B = blanchfield(V);
    ASSERT_TRUE(B.generator().has_value());
    EXPECT_EQ(B.pair(P("1"), P("1")).denominator, M.order);
  }
}

TEST(Isotropy, RibbonPatterns) {
  for (unsigned k = 1; k <= 6; ++k) {
    auto V = knots::ribbon(k);
    auto B = blanchfield(V);
    auto subs = proper_submodules(module_from_knot(V));
    ASSERT_EQ(subs.size(), 3u);
    for (const auto& s : subs) EXPECT_TRUE(isotropic(s, B)) << to_string(s.label);
    EXPECT_EQ(subs[1].generator, normalize(P("t") * Rational(k) - LaurentPoly(k + 1)));
    EXPECT_FALSE(isotropic({P("1"), Label::Full}, B));
  }
  auto B = blanchfield(knots::right_trefoil());
  EXPECT_TRUE(isotropic({P("t^2-t+1"), Label::P0}, B));
  EXPECT_FALSE(isotropic({P("1"), Label::Full}, B));
  EXPECT_THROW(isotropic({P("t-2"), Label::Other}, B), DomainError);
}

TEST(Isotropy, MonotoneUnderInclusion) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    auto V = oracle::random_seifert(rng, 1 + i % 2);
    auto M = module_from_knot(V);
    if (M.order.span() == 0 || !M.cyclic) continue;
    auto B = blanchfield(V);
    auto subs = proper_submodules(M);
    for (const auto& big : subs)
      for (const auto& small : subs)
        if (divides(big.generator, small.generator) && isotropic(big, B)) EXPECT_TRUE(isotropic(small, B));
  }
}

TEST(Isotropy, ByPattern) {
  auto M = make_module(standard_member(2));
  for (const auto& s : proper_submodules(M)) EXPECT_EQ(isotropic_by_pattern(s, M), std::optional<bool>(true));
  EXPECT_EQ(isotropic_by_pattern({P("1"), Label::Full}, M), std::optional<bool>(false));
  EXPECT_FALSE(isotropic_by_pattern({P("1"), Label::Other}, M).has_value());
}

TEST(ElementOrder, Examples) {
  auto M = make_module(P("(t-2)(2t-1)"));
  EXPECT_EQ(element_order(M, P("1")), M.order);
  EXPECT_EQ(element_order(M, P("t-2")), P("2t-1"));
  EXPECT_EQ(element_order(M, M.order * P("t^3+1")), P("1"));
  EXPECT_EQ(element_order(M, LaurentPoly()), P("1"));
}

TEST(ElementOrder, ExactAnnihilator) {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> c(-3, 3);
  const LaurentPoly pieces[] = {P("t-2"), P("2t-1"), P("t^2-t+1"), P("3t-2"), P("t+2")};
  for (int i = 0; i < 100; ++i) {
    LaurentPoly order(1), x(1);
    for (const auto& p : pieces) {
      int e = (c(rng) + 3) % 3;
      order = order * power(p, e);
      x = x * power(p, (c(rng) + 3) % 3);
    }
    if (order.span() == 0) continue;
    x = x * LaurentPoly::monomial(c(rng) ? c(rng) : 1, c(rng));
    auto M = make_module(order);
    auto o = element_order(M, x);
    EXPECT_TRUE(divides(M.order, o * x));
    for (const auto& [r, e] : factor(o).factors) EXPECT_FALSE(divides(M.order, exact_quotient(o, r) * x));
  }
}

TEST(Localize, Examples) {
  auto mixed = localize(make_module(P("(t-2)(2t-1)(3t-2)")), P("2t^2-5t+2"), Mode::ClassicalCoprime);
  EXPECT_EQ(mixed.status, Status::Mixed);
  EXPECT_EQ(mixed.survivor, P("(t-2)(2t-1)"));
  ASSERT_EQ(mixed.killed.size(), 1u);
  EXPECT_EQ(mixed.killed[0], P("3t-2"));

  auto dead = localize(make_module(P("t^2-3t+1")), P("t^2-t+1"), Mode::ClassicalCoprime);
  EXPECT_EQ(dead.status, Status::Torsion);
  EXPECT_EQ(dead.survivor, P("1"));

  auto p = standard_member(2);
  auto alive = localize(make_module(p * p * p), p, Mode::StrongCoprime);
  EXPECT_EQ(alive.status, Status::TorsionFree);
  EXPECT_TRUE(localized_injects(make_module(p), p));
  EXPECT_FALSE(localized_injects(make_module(standard_member(3)), p));
  EXPECT_TRUE(localized_injects(make_module(P("1")), p));

  // t-4 and t^2-4 are coprime but isogenous: only the classical localization kills
  auto m = make_module(P("t-4"));
  EXPECT_EQ(localize(m, P("t^2-4"), Mode::ClassicalCoprime).status, Status::Torsion);
  EXPECT_EQ(localize(m, P("t^2-4"), Mode::StrongCoprime).status, Status::TorsionFree);

  EXPECT_THROW(localize(m, LaurentPoly(), Mode::StrongCoprime), DomainError);
  CyclicModule bad;
  bad.order = P("(t-1)(t-2)");
  EXPECT_THROW(localize(bad, p, Mode::StrongCoprime), DomainError);
}

TEST(Localize, Properties) {
  std::mt19937_64 rng(25);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int i = 0; i < 60; ++i) {
    auto lin = [&] {
      int a = c(rng), b = c(rng);
      if (a == 0) a = 1;
      if (a + b == 0) b += 1;
      return LaurentPoly::from_coefficients(std::vector<Integer>{Integer(b), Integer(a)});
    };
    LaurentPoly order = lin() * lin() * lin();
    LaurentPoly p = lin() * lin();
    for (auto mode : {Mode::ClassicalCoprime, Mode::StrongCoprime}) {
      auto v = localize(make_module(order), p, mode);
      EXPECT_TRUE(divides(v.survivor, order));
      EXPECT_EQ(v.status == Status::Torsion, v.survivor.span() == 0);
      auto w = localize(make_module(order * LaurentPoly::monomial(-3, 5)), p, mode);
      EXPECT_EQ(v.survivor, w.survivor);
      EXPECT_EQ(v.status, w.status);
      LaurentPoly prod = v.survivor;
      for (const auto& k : v.killed) prod = prod * k;
      EXPECT_TRUE(unit_equal(prod, order));
    }
  }
}
