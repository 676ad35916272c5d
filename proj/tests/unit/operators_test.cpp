#include <gtest/gtest.h>

#include <random>

#include "knot_oracles.hpp"
#include "knotloc/error.hpp"
#include "knotloc/factor.hpp"
#include "knotloc/operators.hpp"

using namespace knotloc;
using Label = Submodule::Label;
using Kind = SignatureEntry::Kind;
using RStatus = RobustnessReport::Status;

namespace {

LaurentPoly P(const char* s) { return parse_poly(s); }

RobustCertificate bare_certificate(unsigned k) {
  RobustCertificate c;
  c.delta = normalize(LaurentPoly::variable() * Rational(k) - LaurentPoly(k + 1));
  return c;
}

SignatureEntry nonzero(Label l, Rational v) { return {l, Kind::Nonzero, CertifiedReal{v, std::nullopt, "test"}, "test"}; }
SignatureEntry ribbon(Label l) { return {l, Kind::Ribbon, std::nullopt, "test"}; }

}  // namespace

TEST(Reals, ParseAndFormat) {
  std::optional<unsigned> d;
  EXPECT_EQ(parse_real("-4/3", &d), Rational(-4, 3));
  EXPECT_FALSE(d.has_value());
  EXPECT_EQ(parse_real("-1.250", &d), Rational(-5, 4));
  EXPECT_EQ(d, std::optional<unsigned>(3));
  EXPECT_EQ(parse_real(".5"), Rational(1, 2));
  EXPECT_EQ(parse_real("-0.0209"), Rational(-209, 10000));
  EXPECT_EQ(parse_real("010/09"), Rational(10, 9));
  EXPECT_THROW(parse_real("1.2.3"), ParseError);
  EXPECT_THROW(parse_real("1/0"), ParseError);
  EXPECT_THROW(parse_real(""), ParseError);
  CertifiedReal r{Rational(-4, 3), std::nullopt, "x"};
  EXPECT_EQ(r.decimal(5), "-1.33333");
  EXPECT_EQ(CertifiedReal{Rational(2, 3)}.decimal(0), "1");
  EXPECT_EQ(CertifiedReal{Rational(-1, 1000)}.decimal(2), "0.00");
  EXPECT_EQ(CertifiedReal{Rational(1, 20)}.decimal(1), "0.1");
}

TEST(Operator, StandardFamilyIsRobust) {
  for (unsigned k = 1; k <= 5; ++k) {
    auto op = standard_robust_operator(k);
    EXPECT_EQ(op.name, "Rp" + std::to_string(k));
    EXPECT_TRUE(op.generates);
    EXPECT_EQ(op.alpha_order, standard_member(k));
    auto r = is_robust(op);
    EXPECT_EQ(r.status, RStatus::Robust) << k;
    ASSERT_EQ(r.isotropic.size(), 3u);
    // P0 and P- carry rho0(trefoil) = -4/3
    for (const auto& e : op.certificate->signatures)
      if (e.kind == Kind::Nonzero) EXPECT_EQ(e.value->value, Rational(-4, 3));
  }
}

TEST(Operator, MakeRejectsBadData) {
  auto R = knots::ribbon(2);
  EXPECT_THROW(make_operator("x", R, P("t-1")), DomainError);
  EXPECT_THROW(make_operator("x", R, P("t^2-t+1")), DomainError);
  EXPECT_THROW(make_operator("x", R, LaurentPoly()), DomainError);
  auto c = bare_certificate(2);
  c.delta = P("(2t-3)(3t-2)");
  EXPECT_THROW(make_operator("x", R, standard_member(2), c), DomainError);  // reducible
  c.delta = P("t-2");
  EXPECT_THROW(make_operator("x", R, standard_member(2), c), DomainError);  // wrong shape
  c = bare_certificate(2);
  c.signatures = {ribbon(Label::P0)};
  EXPECT_THROW(make_operator("x", R, standard_member(2), c), DomainError);
  c.signatures = {nonzero(Label::P0, 0)};
  EXPECT_THROW(make_operator("x", R, standard_member(2), c), DomainError);
  c.signatures = {ribbon(Label::Pplus), ribbon(Label::Pplus)};
  EXPECT_THROW(make_operator("x", R, standard_member(2), c), DomainError);
  c.signatures = {{Label::Pplus, Kind::Ribbon, std::nullopt, ""}};
  EXPECT_THROW(make_operator("x", R, standard_member(2), c), DomainError);
}

TEST(Operator, NullCurveNeverRobust) {
  auto op = make_operator("null", knots::ribbon(1), P("1"));
  EXPECT_FALSE(op.generates);
  auto r = is_robust(op);
  EXPECT_EQ(r.status, RStatus::NotRobust);
  EXPECT_FALSE(r.reasons.empty());
  // a proper factor of the order is a legal curve order, but does not generate
  EXPECT_EQ(is_robust(make_operator("half", knots::ribbon(1), P("t-2"))).status, RStatus::NotRobust);
}

TEST(Operator, SymmetricDeltaSquared) {
  // trefoil # mirror has Delta = Phi_6^2 with delta = reciprocal(delta); the shape is accepted
  auto V = connected_sum(knots::right_trefoil(), mirror(knots::right_trefoil()));
  RobustCertificate c;
  c.delta = cyclotomic(6);
  c.signatures = {ribbon(Label::Pplus)};
  auto op = make_operator("sq", V, cyclotomic(6), c);
  EXPECT_FALSE(op.generates);
  c.signatures = {ribbon(Label::Pminus)};
  EXPECT_THROW(make_operator("sq", V, cyclotomic(6), c), DomainError);
  // its module is Q[t]/Phi_6 + Q[t]/Phi_6, so no curve has order Phi_6^2
  EXPECT_THROW(make_operator("sq", V, power(cyclotomic(6), 2)), DomainError);
  auto r = is_robust(op);
  EXPECT_EQ(r.status, RStatus::NotRobust);
}

TEST(Operator, ReducibleAlexanderNotRobust) {
  auto V = connected_sum(knots::ribbon(1), knots::ribbon(2));
  auto op = make_operator("two", V, standard_member(1));
  auto r = is_robust(op);
  EXPECT_EQ(r.status, RStatus::NotRobust);
}

TEST(Operator, MissingEntriesAreConditional) {
  auto c = bare_certificate(3);
  c.signatures = {ribbon(Label::Pplus), nonzero(Label::Pminus, Rational(-4, 3))};
  auto r = is_robust(make_operator("c", knots::ribbon(3), standard_member(3), c));
  EXPECT_EQ(r.status, RStatus::Conditional);
  ASSERT_EQ(r.missing.size(), 1u);
  EXPECT_EQ(r.missing[0], Label::P0);
  EXPECT_EQ(is_robust(make_operator("u", knots::ribbon(3), standard_member(3))).status, RStatus::Conditional);
}

TEST(Operator, MonotoneInCertificate) {
  const std::vector<SignatureEntry> all{ribbon(Label::Pplus), nonzero(Label::P0, Rational(-4, 3)),
                                        nonzero(Label::Pminus, Rational(-4, 3))};
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned mask = 0; mask < 8; ++mask) {
      auto c = bare_certificate(k);
      for (unsigned i = 0; i < 3; ++i)
        if (mask >> i & 1) c.signatures.push_back(all[i]);
      auto status = is_robust(make_operator("m", knots::ribbon(k), standard_member(k), c)).status;
      EXPECT_NE(status, RStatus::NotRobust);
      EXPECT_EQ(status == RStatus::Robust, mask == 7);
      // supersets never lose robustness
      auto full = bare_certificate(k);
      full.signatures = all;
      if (status == RStatus::Robust)
        EXPECT_EQ(is_robust(make_operator("m", knots::ribbon(k), standard_member(k), full)).status, RStatus::Robust);
    }
}

TEST(Operator, RobustImpliesShapeFromRawData) {
  std::mt19937_64 rng(31);
  int robust = 0;
  for (int i = 0; i < 60; ++i) {
    auto V = oracle::random_seifert(rng, 1);
    auto d = alexander_poly(V);
    if (d.span() == 0) continue;
    RobustCertificate c;
    auto fs = factor(d).factors;
    c.delta = fs[0].first;
    c.signatures = {ribbon(Label::Pplus), nonzero(Label::P0, 1)};
    if (!unit_equal(c.delta, reciprocal(c.delta))) c.signatures.push_back(nonzero(Label::Pminus, 1));
    DoublingOperator op;
    try {
      op = make_operator("r", V, d, c);
    } catch (const DomainError&) {
      continue;
    }
    if (is_robust(op).status != RStatus::Robust) continue;
    ++robust;
    auto raw = oracle::alexander_by_cofactors(V);
    EXPECT_EQ(abs(augmentation(raw)), 1);
    EXPECT_TRUE(unit_equal(raw, c.delta * reciprocal(c.delta)));
    EXPECT_TRUE(is_irreducible(c.delta));
  }
  EXPECT_GT(robust, 0);
}

TEST(Operator, IsotropicListMatchesBlanchfield) {
  for (unsigned k = 1; k <= 4; ++k) {
    auto op = standard_robust_operator(k);
    auto B = blanchfield(op.pattern);
    auto r = is_robust(op);
    std::size_t iso = 0;
    for (const auto& s : proper_submodules(module_from_knot(op.pattern))) iso += isotropic(s, B);
    EXPECT_EQ(iso, r.isotropic.size());
  }
}

TEST(Bookkeeping, Examples) {
  CertifiedReal zero{Rational(0), std::nullopt, "asserted"};
  auto b = rho1_bookkeeping(zero, rho0(knots::right_trefoil()), "trefoil");
  EXPECT_EQ(b.rho1.value, Rational(-4, 3));
  EXPECT_TRUE(b.rho1.exact());
  EXPECT_EQ(b.rho_minus.value, Rational(-4, 3));
  EXPECT_NE(b.rho1.provenance.find("asserted"), std::string::npos);

  CertifiedReal base{Rational(7, 5), std::nullopt, "asserted"};
  auto u = rho1_bookkeeping(base, rho0(knots::unknot()), "unknot");
  EXPECT_EQ(u.rho1.value, Rational(7, 5));
  EXPECT_EQ(u.rho_minus.value, 0);

  auto j = rho1_bookkeeping(zero, rho0(knots::twisted_base(), 25), "J");
  EXPECT_EQ(j.rho1.digits, std::optional<unsigned>(25));
  Rational diff = j.rho1.value - parse_real(rho0(knots::twisted_base()).numeric);
  EXPECT_LT(abs(diff), Rational(1, 1000000) * Rational(1, 1000000) * Rational(1, 1000000) * Rational(1, 1000000));

  EXPECT_THROW(rho1_bookkeeping({Rational(0), std::nullopt, ""}, rho0(knots::unknot()), "u"), DomainError);
}

TEST(Bookkeeping, UninfectedCaseNeedsNonzeroRho1) {
  EXPECT_THROW(standard_robust_operator(1, knots::unknot()), DomainError);
  auto op = standard_robust_operator(1, knots::unknot(), {Rational(1, 2), std::nullopt, "asserted"});
  EXPECT_EQ(op.name, "Rp1_unknot");
  EXPECT_EQ(is_robust(op).status, RStatus::Robust);
}

TEST(Expression, ComposeAndSequences) {
  auto J = base_expression(knots::twisted_base());
  EXPECT_EQ(J.arf, 0);
  auto e = compose({standard_robust_operator(3), standard_robust_operator(5)}, J);
  EXPECT_EQ(e.depth(), 2u);
  EXPECT_TRUE(e.is_chain());
  EXPECT_EQ(e.op->name, "Rp3");
  auto seqs = order_sequences(e);
  ASSERT_EQ(seqs.size(), 1u);
  EXPECT_EQ(seqs[0], (PolySequence{standard_member(3), standard_member(5)}));

  auto one = compose({standard_robust_operator(1)}, base_expression(knots::unknot()));
  EXPECT_EQ(one.depth(), 1u);
  EXPECT_EQ(order_sequences(one), std::vector<PolySequence>{{standard_member(1)}});
  EXPECT_THROW(compose({}, J), DomainError);
  EXPECT_EQ(order_sequences(J), std::vector<PolySequence>{{}});
}

TEST(Expression, MultiInput) {
  // two curves in the pattern of R1 # R2, of orders p_1 and p_2
  auto V = connected_sum(knots::ribbon(1), knots::ribbon(2));
  auto op = make_operator("R1#R2", V, standard_member(1));
  auto a = compose({standard_robust_operator(3)}, base_expression(knots::twisted_base()));
  auto b = compose({standard_robust_operator(4)}, base_expression(knots::unknot()));
  auto e = apply_operator(op, {{standard_member(1), a}, {standard_member(2), b}});
  EXPECT_FALSE(e.is_chain());
  EXPECT_EQ(e.leaves().size(), 2u);
  auto seqs = order_sequences(e);
  ASSERT_EQ(seqs.size(), 2u);
  EXPECT_EQ(seqs[0], (PolySequence{standard_member(1), standard_member(3)}));
  EXPECT_EQ(seqs[1], (PolySequence{standard_member(2), standard_member(4)}));
  EXPECT_THROW(apply_operator(op, {{standard_member(3), a}}), DomainError);
  EXPECT_THROW(apply_operator(op, std::vector<std::pair<LaurentPoly, KnotExpression>>{}), DomainError);
}

TEST(Expression, ChainLaws) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<unsigned> pick(1, 6), len(1, 5);
  for (int i = 0; i < 30; ++i) {
    std::vector<DoublingOperator> ops;
    const unsigned n = len(rng);
    for (unsigned j = 0; j < n; ++j) ops.push_back(make_operator("R", knots::ribbon(pick(rng)), LaurentPoly(1)));
    auto base = base_expression(knots::figure_eight());
    auto e = compose(ops, base);
    auto seqs = order_sequences(e);
    ASSERT_EQ(seqs.size(), 1u);
    ASSERT_EQ(seqs[0].size(), n);
    // innermost-first per-level orders, reversed
    for (unsigned j = 0; j < n; ++j) EXPECT_EQ(seqs[0][j], ops[j].alpha_order);
    // nesting is associative
    std::vector<DoublingOperator> head(ops.begin(), ops.begin() + 1), tail(ops.begin() + 1, ops.end());
    if (!tail.empty()) EXPECT_TRUE(compose(head, compose(tail, base)) == e);
  }
}
