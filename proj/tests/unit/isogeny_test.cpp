#include <gtest/gtest.h>

#include <random>

#include "knotloc/error.hpp"
#include "knotloc/factor.hpp"
#include "knotloc/isogeny.hpp"

using namespace knotloc;

namespace {

LaurentPoly P(const char* s) { return parse_poly(s); }

LaurentPoly random_poly(std::mt19937_64& rng, int max_degree, int coeff) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::vector<Integer> v(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : v) x = c(rng);
  if (v.back() == 0) v.back() = 1;
  if (v.front() == 0) v.front() = 1;
  return LaurentPoly::from_coefficients(v);
}

}  // namespace

TEST(ClassifyRoots, Kinds) {
  auto a = classify_roots(P("t-2"));
  EXPECT_EQ(a.kind, RootClass::Kind::RationalRoot);
  EXPECT_EQ(a.value, 2);
  auto b = classify_roots(P("t^2-t+1"));
  EXPECT_EQ(b.kind, RootClass::Kind::RootOfUnity);
  EXPECT_EQ(b.order, 6u);
  auto c = classify_roots(P("t^2-t-1"));
  EXPECT_EQ(c.kind, RootClass::Kind::GeneralAlgebraic);
  EXPECT_EQ(classify_roots(P("3t+2")).value, Rational(-2, 3));
  EXPECT_THROW(classify_roots(P("t^2-1")), DomainError);
  EXPECT_THROW(classify_roots(P("5")), DomainError);
}

TEST(MultiplicativeDependence, Examples) {
  EXPECT_FALSE(rationals_multiplicatively_dependent(Rational(1, 2), Rational(2, 3)).dependent);
  auto d = rationals_multiplicatively_dependent(Rational(2), Rational(4));
  EXPECT_TRUE(d.dependent);
  EXPECT_EQ(d.k, 2);
  EXPECT_EQ(d.n, 1);
  auto e = rationals_multiplicatively_dependent(Rational(-1), Rational(1));
  EXPECT_TRUE(e.dependent);
  EXPECT_EQ(e.k, 2);
  EXPECT_EQ(e.n, 1);
  EXPECT_FALSE(rationals_multiplicatively_dependent(Rational(1), Rational(3)).dependent);
  EXPECT_THROW(rationals_multiplicatively_dependent(Rational(0), Rational(3)), DomainError);
}

TEST(MultiplicativeDependence, ReturnedExponentsVerify) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> base(-6, 6);
  std::uniform_int_distribution<int> ex(-4, 4);
  for (int i = 0; i < 300; ++i) {
    int b1 = base(rng), b2 = base(rng);
    if (b1 == 0 || b2 == 0) continue;
    Rational w = make_rational(b1, b2 == 0 ? 1 : std::abs(b2) + 1);
    if (w == 0) continue;
    auto pw = [](Rational x, int e) {
      Rational r = 1;
      if (e < 0) {
        x = 1 / x;
        e = -e;
      }
      for (int j = 0; j < e; ++j) r *= x;
      return r;
    };
    int e1 = ex(rng), e2 = ex(rng);
    if (e1 == 0) e1 = 1;
    if (e2 == 0) e2 = -1;
    Rational r = pw(w, e1), s = pw(w, e2) * (i % 2 ? -1 : 1);
    auto d = rationals_multiplicatively_dependent(r, s);
    ASSERT_TRUE(d.dependent) << r << " " << s;
    EXPECT_EQ(pw(r, static_cast<int>(d.k)), pw(s, static_cast<int>(d.n)));
    EXPECT_NE(d.k, 0);
    EXPECT_NE(d.n, 0);
  }
}

TEST(StronglyCoprime, WorkedExamples) {
  auto v = strongly_coprime(P("t-4"), P("t^2-4"));
  ASSERT_TRUE(v.isogenous());
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->n, 2);
  EXPECT_EQ(v.witness->k, 1);
  EXPECT_TRUE(shares_root_after_substitution(P("t-4"), P("t^2-4"), 2, 1));

  auto c = strongly_coprime(cyclotomic(5), P("t-2"));
  EXPECT_TRUE(c.strongly_coprime());
  EXPECT_TRUE(c.exact);

  auto cc = strongly_coprime(cyclotomic(5), cyclotomic(6));
  EXPECT_TRUE(cc.isogenous());
  EXPECT_EQ(cc.witness->n, 6);
  EXPECT_EQ(cc.witness->k, 5);
}

TEST(StronglyCoprime, SignsMatterForRationalRoots) {
  // t+2 and t+4: x^n = -2 and x^k = -4 have no common solution
  auto v = strongly_coprime(P("t+2"), P("t+4"));
  EXPECT_TRUE(v.strongly_coprime());
  EXPECT_TRUE(v.exact);
  for (long n = -8; n <= 8; ++n)
    for (long k = -8; k <= 8; ++k)
      if (n && k) EXPECT_FALSE(shares_root_after_substitution(P("t+2"), P("t+4"), n, k));
  auto w = strongly_coprime(P("t+2"), P("t-4"));
  ASSERT_TRUE(w.isogenous());
  EXPECT_TRUE(shares_root_after_substitution(P("t+2"), P("t-4"), w.witness->n, w.witness->k));
  auto u = strongly_coprime(P("t+2"), P("t+8"));
  EXPECT_TRUE(u.isogenous());
}

TEST(StronglyCoprime, StandardFamily) {
  auto fam = standard_family(8);
  EXPECT_EQ(fam[0], P("2t^2-5t+2"));
  EXPECT_EQ(fam[1], P("6t^2-13t+6"));
  for (auto& p : fam) EXPECT_EQ(augmentation(p), -1);
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j) {
      auto v = strongly_coprime(fam[i], fam[j]);
      EXPECT_TRUE(v.strongly_coprime());
      EXPECT_TRUE(v.exact);
    }
}

TEST(StronglyCoprime, DualIsIsogenous) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    LaurentPoly p = random_poly(rng, 5, 7);
    if (p.span() < 1) continue;
    auto v = strongly_coprime(p, reciprocal(p));
    ASSERT_TRUE(v.isogenous()) << p;
    EXPECT_TRUE(shares_root_after_substitution(p, reciprocal(p), v.witness->n, v.witness->k));
  }
}

TEST(StronglyCoprime, GeneralAlgebraicSweep) {
  // golden ratio phi and phi^2: t^2-t-1 vs t^2-3t+1
  auto v = strongly_coprime(P("t^2-t-1"), P("t^2-3t+1"));
  ASSERT_TRUE(v.isogenous());
  EXPECT_TRUE(shares_root_after_substitution(P("t^2-t-1"), P("t^2-3t+1"), v.witness->n, v.witness->k));
  EXPECT_EQ(v.bound, 12);
  // sqrt 2 versus 2
  auto w = strongly_coprime(P("t^2-2"), P("t-2"));
  ASSERT_TRUE(w.isogenous());
  // unrelated quadratic irrationalities: only a bounded verdict is possible
  auto u = strongly_coprime(P("t^2-t-1"), P("t^2-2t-1"), 6);
  EXPECT_TRUE(u.strongly_coprime());
  EXPECT_FALSE(u.exact);
  EXPECT_EQ(u.bound, 6);
  // rational root against roots on the unit circle is exact
  auto x = strongly_coprime(P("t-3"), P("2t^2-t+2"));
  EXPECT_TRUE(x.strongly_coprime());
  EXPECT_TRUE(x.exact);
  EXPECT_FALSE(x.bound.has_value());
}

TEST(StronglyCoprime, Units) {
  auto v = strongly_coprime(P("-3t^5"), P("t^2-t-1"));
  EXPECT_TRUE(v.strongly_coprime());
  EXPECT_TRUE(v.exact);
  EXPECT_THROW(strongly_coprime(LaurentPoly(), P("t")), DomainError);
}

TEST(StronglyCoprime, Properties) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 120; ++i) {
    LaurentPoly p = random_poly(rng, 3, 6);
    LaurentPoly q = random_poly(rng, 3, 6);
    auto a = strongly_coprime(p, q, 6);
    auto b = strongly_coprime(q, p, 6);
    EXPECT_EQ(a.status, b.status) << p << " | " << q;
    if (a.strongly_coprime()) {
      EXPECT_TRUE(coprime(p, q) || p.span() == 0 || q.span() == 0);
    } else {
      EXPECT_TRUE(shares_root_after_substitution(p, q, a.witness->n, a.witness->k));
    }
    if (p.span() > 0 && q.span() > 0) {
      auto c = strongly_coprime(p, reciprocal(q), 6);
      auto d = strongly_coprime(reciprocal(p), q, 6);
      EXPECT_EQ(c.status, d.status);
    }
  }
}

TEST(Tuple, Examples) {
  auto p = [](unsigned k) { return standard_member(k); };
  auto a = tuple_strongly_coprime({p(2), p(3)}, {p(2), p(5)});
  EXPECT_TRUE(a.strongly_coprime);
  EXPECT_EQ(a.index, 2u);
  EXPECT_EQ(a.mode, TupleVerdict::Mode::Strong);
  auto b = tuple_strongly_coprime({p(2), p(3)}, {p(2), p(3)});
  EXPECT_FALSE(b.strongly_coprime);
  auto c = tuple_strongly_coprime({p(2), p(3)}, {p(5), p(3)});
  EXPECT_TRUE(c.strongly_coprime);
  EXPECT_EQ(c.index, 1u);
  EXPECT_EQ(c.mode, TupleVerdict::Mode::PlainCoprime);
  EXPECT_THROW(tuple_strongly_coprime({p(1)}, {p(1), p(2)}), DomainError);
  // index 1 only needs plain coprimality: t-4 and t^2-4 are coprime though isogenous
  auto d = tuple_strongly_coprime({P("t^2-4")}, {P("t-4")});
  EXPECT_TRUE(d.strongly_coprime);
}

TEST(Sequence, ParseAndFormat) {
  auto s = parse_sequence("p:2t^2-5t+2;p:6t^2-13t+6");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[1], P("6t^2-13t+6"));
  EXPECT_EQ(parse_sequence(format_sequence(s)), s);
  EXPECT_THROW(parse_sequence("2t-1"), ParseError);
  EXPECT_THROW(parse_sequence("p:t;p:0"), ParseError);
  EXPECT_THROW(parse_sequence("p:t;p:(t"), ParseError);
}

TEST(LogHint, Examples) {
  EXPECT_EQ(log_independence_hint(P("t-2"), P("t-3")), LogHint::Sufficient);
  EXPECT_EQ(log_independence_hint(P("t-2"), P("t-4")), LogHint::NotSufficient);
  EXPECT_EQ(log_independence_hint(P("t^2-t+1"), P("t-2")), LogHint::NotApplicable);
  // the standard family has mutually inverse roots inside each member
  auto fam = standard_family(6);
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = 0; j < fam.size(); ++j)
      EXPECT_EQ(log_independence_hint(fam[i], fam[j]), i == j ? LogHint::NotSufficient : LogHint::Sufficient);
}

TEST(LogHint, AgreesWithDecision) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> c(-12, 12);
  for (int i = 0; i < 200; ++i) {
    int a = c(rng), b = c(rng), d = c(rng), e = c(rng);
    if (!a || !b || !d || !e) continue;
    LaurentPoly p = LaurentPoly::from_coefficients(std::vector<Integer>{Integer(b), Integer(a)});
    LaurentPoly q = LaurentPoly::from_coefficients(std::vector<Integer>{Integer(e), Integer(d)});
    if (log_independence_hint(p, q) == LogHint::Sufficient) EXPECT_TRUE(strongly_coprime(p, q).strongly_coprime());
  }
}
