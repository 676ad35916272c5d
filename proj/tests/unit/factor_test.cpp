#include <gtest/gtest.h>

#include <random>

#include "knotloc/error.hpp"
#include "knotloc/factor.hpp"

using namespace knotloc;

namespace {

LaurentPoly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST(Factor, RationalRoots) {
  auto f = factor(P("2t^2-5t+2"));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].first, P("t-2"));
  EXPECT_EQ(f.factors[1].first, P("2t-1"));
  EXPECT_EQ(f.expand(), P("2t^2-5t+2"));
}

TEST(Factor, Irreducible) {
  auto f = factor(P("t^2-t+1"));
  ASSERT_EQ(f.factors.size(), 1u);
  EXPECT_EQ(f.factors[0].second, 1);
  EXPECT_TRUE(is_irreducible(P("t^2-t-1")));
  EXPECT_FALSE(is_irreducible(P("t^2-1")));
}

TEST(Factor, CyclotomicSplitting) {
  auto f = factor(P("t^4-1"));
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.factors[0].first, P("t-1"));
  EXPECT_EQ(f.factors[1].first, P("t+1"));
  EXPECT_EQ(f.factors[2].first, P("t^2+1"));
  auto g = factor(P("t^60-1"));
  EXPECT_EQ(g.factors.size(), 12u);
  EXPECT_EQ(g.expand(), P("t^60-1"));
}

TEST(Factor, UnitsAndShifts) {
  LaurentPoly p = P("(-3/2) t^-3 (t-2)^2 (t^2+t+1)");
  auto f = factor(p);
  EXPECT_EQ(f.expand(), p);
  EXPECT_EQ(f.shift, -3);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].second, 2);
  EXPECT_TRUE(factor(P("5t^7")).factors.empty());
  EXPECT_THROW(factor(LaurentPoly()), DomainError);
}

TEST(Factor, HardZassenhausCase) {
  // Swinnerton-Dyer style: irreducible over Q, splits into quadratics mod every prime.
  LaurentPoly sd = P("t^4 - 10t^2 + 1");
  EXPECT_TRUE(is_irreducible(sd));
  LaurentPoly p = P("t^8 - 40t^6 + 352t^4 - 960t^2 + 576");
  EXPECT_TRUE(is_irreducible(p));
  LaurentPoly q = sd * P("t^4 - 2") * P("3t^3 - t + 7");
  auto f = factor(q);
  EXPECT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.expand(), q);
}

TEST(Factor, Cyclotomics) {
  EXPECT_EQ(cyclotomic(1), P("t-1"));
  EXPECT_EQ(cyclotomic(6), P("t^2-t+1"));
  EXPECT_EQ(cyclotomic(5), P("t^4+t^3+t^2+t+1"));
  EXPECT_EQ(cyclotomic(12), P("t^4-t^2+1"));
  for (unsigned n = 1; n <= 60; ++n) {
    EXPECT_EQ(cyclotomic_index(cyclotomic(n)), n);
    EXPECT_TRUE(is_irreducible(cyclotomic(n)));
  }
  EXPECT_EQ(cyclotomic_index(P("t^2-t-1")), 0u);
  EXPECT_EQ(cyclotomic_index(P("t^2+t+2")), 0u);
  // Phi_105 is the first with a coefficient of absolute value 2.
  EXPECT_EQ(cyclotomic(105).coefficient(7), -2);
}

TEST(Factor, RandomReassembly) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> c(-6, 6);
  std::uniform_int_distribution<int> d(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    LaurentPoly p(1L);
    const int pieces = 1 + trial % 4;
    std::vector<LaurentPoly> parts;
    for (int i = 0; i < pieces; ++i) {
      std::vector<Integer> v(static_cast<std::size_t>(d(rng)) + 1);
      for (auto& x : v) x = c(rng);
      if (v.back() == 0) v.back() = 1;
      if (v.front() == 0) v.front() = -1;
      LaurentPoly part = LaurentPoly::from_coefficients(v);
      parts.push_back(part);
      p *= part;
    }
    auto f = factor(p);
    EXPECT_EQ(f.expand(), p) << p.to_string();
    std::size_t total = 0;
    for (auto& [g, m] : f.factors) {
      EXPECT_TRUE(is_normalized(g));
      EXPECT_EQ(factor(g).factors.size(), 1u) << g.to_string();
      total += static_cast<std::size_t>(m);
    }
    // every random piece contributes at least one irreducible factor
    std::size_t lower = 0;
    for (auto& part : parts) lower += part.span() > 0;
    EXPECT_GE(total, lower);
    // ordering is deterministic
    for (std::size_t i = 1; i < f.factors.size(); ++i)
      EXPECT_LE(f.factors[i - 1].first.span(), f.factors[i].first.span());
  }
}

TEST(Factor, LargeDegree) {
  LaurentPoly p = P("(t^5 - t - 1)(t^7 + 3t^2 - 2)(2t^11 - t^6 + 5)(t^13 + t + 1)");
  auto f = factor(p);
  EXPECT_EQ(f.expand(), p);
  // t^7 + 3t^2 - 2 has the root -1
  ASSERT_EQ(f.factors.size(), 5u);
  EXPECT_EQ(f.factors[0].first, P("t+1"));
}
