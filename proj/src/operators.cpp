#include "knotloc/operators.hpp"

#include <algorithm>
#include <cctype>

#include "knotloc/error.hpp"
#include "knotloc/factor.hpp"

namespace knotloc {

namespace {

using Label = Submodule::Label;

Integer pow10(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// delta in its role as P+: the certificate's when present, else the first prime factor
struct Shape {
  bool ok = false;
  bool symmetric = false;  // delta = reciprocal(delta) up to units
  LaurentPoly delta;
};

Shape shape_of(const LaurentPoly& alexander) {
  Shape s;
  if (alexander.span() <= 0) return s;
  const auto fs = factor(alexander).factors;
  if (fs.size() == 2 && fs[0].second == 1 && fs[1].second == 1 && unit_equal(fs[1].first, reciprocal(fs[0].first)) &&
      !unit_equal(fs[0].first, reciprocal(fs[0].first))) {
    s = {true, false, fs[0].first};
  } else if (fs.size() == 1 && fs[0].second == 2 && unit_equal(fs[0].first, reciprocal(fs[0].first))) {
    s = {true, true, fs[0].first};
  }
  return s;
}

}  // namespace

std::string CertifiedReal::decimal(unsigned places) const {
  // round half away from zero at `places` decimals
  const Integer scale = pow10(places);
  Rational scaled = value * Rational(scale);
  Integer num = abs(scaled.get_num());
  Integer q = (2 * num + scaled.get_den()) / (2 * scaled.get_den());
  std::string digits = q.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  if (sgn(value) < 0 && q != 0) out.insert(0, "-");
  return out;
}

Rational parse_real(const std::string& text, std::optional<unsigned>* digits) {
  if (digits) *digits = std::nullopt;
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw ParseError("empty number", 0);
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    ++i;
  }
  auto read_digits = [&](std::string& into) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) into += s[i++];
  };
  std::string whole, frac, den;
  read_digits(whole);
  Rational r;
  if (i < s.size() && s[i] == '/') {
    ++i;
    read_digits(den);
    if (whole.empty() || den.empty() || i != s.size()) throw ParseError("malformed fraction '" + text + "'", i);
    if (Integer(den, 10) == 0) throw ParseError("zero denominator in '" + text + "'", i);
    r = make_rational(Integer(whole, 10), Integer(den, 10));
  } else {
    if (i < s.size() && s[i] == '.') {
      ++i;
      read_digits(frac);
      if (digits) *digits = static_cast<unsigned>(frac.size());
    }
    if (i != s.size() || (whole.empty() && frac.empty())) throw ParseError("malformed number '" + text + "'", i);
    r = make_rational(Integer(whole.empty() ? "0" : whole, 10) * pow10(static_cast<unsigned>(frac.size())) +
                          Integer(frac.empty() ? "0" : frac, 10),
                      pow10(static_cast<unsigned>(frac.size())));
  }
  return negative ? Rational(-r) : r;
}

CertifiedReal from_rho0(const Rho0Value& v, const std::string& provenance) {
  if (v.exact) return {*v.exact, std::nullopt, provenance};
  return {parse_real(v.numeric), v.precision, provenance};
}

std::string to_string(SignatureEntry::Kind k) { return k == SignatureEntry::Kind::Ribbon ? "ribbon" : "nonzero"; }

std::string to_string(RobustnessReport::Status s) {
  switch (s) {
    case RobustnessReport::Status::Robust:
      return "robust";
    case RobustnessReport::Status::NotRobust:
      return "not-robust";
    case RobustnessReport::Status::Conditional:
      return "conditional";
  }
  return "";
}

DoublingOperator make_operator(const std::string& name, const SeifertMatrix& pattern, const LaurentPoly& alpha_order,
                               std::optional<RobustCertificate> certificate) {
  if (alpha_order.is_zero()) throw DomainError("operator " + name + ": alpha_order must be nonzero");
  const LaurentPoly delta = alexander_poly(pattern);
  const LaurentPoly exponent = module_exponent(pattern);
  DoublingOperator op;
  op.name = name;
  op.pattern = pattern;
  op.alpha_order = normalize(alpha_order);
  if (!divides(op.alpha_order, exponent)) {
    throw DomainError("operator " + name + ": alpha_order " + op.alpha_order.to_string() +
                      " is not the order of any element of the Alexander module (exponent " + exponent.to_string() + ")");
  }
  op.generates = unit_equal(op.alpha_order, delta);
  if (certificate) {
    RobustCertificate& c = *certificate;
    if (c.delta.is_zero() || c.delta.span() == 0)
      throw DomainError("operator " + name + ": certificate delta must not be zero or a unit");
    if (!is_irreducible(c.delta)) throw DomainError("operator " + name + ": certificate delta " + c.delta.to_string() + " is reducible");
    c.delta = normalize(c.delta);
    if (!unit_equal(delta, c.delta * reciprocal(c.delta))) {
      throw DomainError("operator " + name + ": Alexander polynomial " + delta.to_string() +
                        " is not delta * reciprocal(delta) for delta = " + c.delta.to_string());
    }
    const bool symmetric = unit_equal(c.delta, reciprocal(c.delta));
    std::vector<Label> seen;
    for (const auto& e : c.signatures) {
      if (e.submodule != Label::P0 && e.submodule != Label::Pplus && e.submodule != Label::Pminus)
        throw DomainError("operator " + name + ": signature entries must be for P0, P+ or P-");
      if (symmetric && e.submodule == Label::Pminus)
        throw DomainError("operator " + name + ": delta is symmetric so P- coincides with P+; use P+");
      if (std::find(seen.begin(), seen.end(), e.submodule) != seen.end())
        throw DomainError("operator " + name + ": duplicate signature entry for " + to_string(e.submodule));
      seen.push_back(e.submodule);
      if (e.submodule == Label::P0 && e.kind == SignatureEntry::Kind::Ribbon)
        throw DomainError("operator " + name + ": P0 is not a Lagrangian and cannot correspond to a ribbon disk");
      if (e.kind == SignatureEntry::Kind::Nonzero && e.value && sgn(e.value->value) == 0)
        throw DomainError("operator " + name + ": entry for " + to_string(e.submodule) + " is asserted nonzero but has value 0");
      if (e.provenance.empty())
        throw DomainError("operator " + name + ": entry for " + to_string(e.submodule) + " has no provenance");
    }
  }
  op.certificate = std::move(certificate);
  return op;
}

RobustnessReport is_robust(const DoublingOperator& op) {
  RobustnessReport r;
  const LaurentPoly delta = alexander_poly(op.pattern);
  if (delta.span() == 0) {
    r.reasons.push_back("the Alexander module of the pattern is trivial");
    return r;
  }
  const CyclicModule m = module_from_knot(op.pattern);
  if (!m.cyclic) r.reasons.push_back("the Alexander module of the pattern is not cyclic");
  if (!op.generates) r.reasons.push_back("alpha does not generate the Alexander module (order " + op.alpha_order.to_string() + ")");
  Shape s = shape_of(delta);
  if (!s.ok) r.reasons.push_back("Alexander polynomial " + delta.to_string() + " is not delta * reciprocal(delta) with delta prime");
  if (!r.reasons.empty()) return r;
  if (op.certificate) s.delta = op.certificate->delta;

  std::vector<std::pair<Label, LaurentPoly>> subs{{Label::P0, delta}, {Label::Pplus, s.delta}};
  if (!s.symmetric) subs.push_back({Label::Pminus, normalize(reciprocal(s.delta))});
  const BlanchfieldPairing B(op.pattern);
  for (const auto& [label, gen] : subs) {
    if (!isotropic({gen, label}, B)) {
      r.reasons.push_back("submodule " + to_string(label) + " is not isotropic");
      return r;
    }
    r.isotropic.push_back(label);
  }
  for (Label l : r.isotropic) {
    bool covered = false;
    if (op.certificate)
      for (const auto& e : op.certificate->signatures) covered = covered || e.submodule == l;
    if (!covered) r.missing.push_back(l);
  }
  r.status = r.missing.empty() ? RobustnessReport::Status::Robust : RobustnessReport::Status::Conditional;
  return r;
}

Rho1Bookkeeping rho1_bookkeeping(const CertifiedReal& base_rho1, const Rho0Value& infection_rho0,
                                 const std::string& infection_name) {
  if (base_rho1.provenance.empty()) throw DomainError("the base first-order signature needs a provenance");
  const std::string computed = "rho0(" + infection_name + ") from its signature profile";
  CertifiedReal t = from_rho0(infection_rho0, computed);
  Rho1Bookkeeping out;
  out.rho1.value = base_rho1.value + t.value;
  if (base_rho1.digits || t.digits)
    out.rho1.digits = std::min(base_rho1.digits.value_or(~0u), t.digits.value_or(~0u));
  out.rho1.provenance = base_rho1.provenance + " + " + computed + ", by additivity under infection";
  out.rho_minus = t;
  out.rho_minus.provenance = computed + ", since the P- signature of the uninfected pattern vanishes by its ribbon disk";
  return out;
}

DoublingOperator standard_robust_operator(unsigned k, const SeifertMatrix& infection, const CertifiedReal& base_rho1) {
  const SeifertMatrix pattern = knots::ribbon(k);
  const std::string iname = infection.name().empty() ? "K" : infection.name();
  const Rho1Bookkeeping b = rho1_bookkeeping(base_rho1, rho0(infection), iname);
  RobustCertificate c;
  c.delta = normalize(LaurentPoly::variable() * Rational(k) - LaurentPoly(k + 1));
  using Kind = SignatureEntry::Kind;
  c.signatures.push_back({Label::Pplus, Kind::Ribbon, std::nullopt, "cutting the band linked by eta+ gives a ribbon disk"});
  if (sgn(b.rho1.value) == 0) throw DomainError("infection by " + iname + " leaves rho1 at zero; the operator is not robust");
  c.signatures.push_back({Label::P0, Kind::Nonzero, b.rho1, b.rho1.provenance});
  if (infection.size() == 0) {
    c.signatures.push_back({Label::Pminus, Kind::Ribbon, std::nullopt, "cutting the band linked by eta- gives a ribbon disk"});
  } else {
    if (sgn(b.rho_minus.value) == 0)
      throw DomainError("rho0(" + iname + ") = 0, so the P- signature is not certified nonzero");
    c.signatures.push_back({Label::Pminus, Kind::Nonzero, b.rho_minus, b.rho_minus.provenance});
  }
  c.notes = "genus-one ribbon pattern with one band infected by " + iname;
  std::string name = "Rp" + std::to_string(k);
  if (infection.name() != "trefoil") name += "_" + iname;
  return make_operator(name, pattern, alexander_poly(pattern), std::move(c));
}

std::size_t KnotExpression::depth() const {
  if (kind == Kind::Base) return 0;
  std::size_t d = 0;
  for (const auto& in : inputs) d = std::max(d, in.expr->depth());
  return d + 1;
}

bool KnotExpression::is_chain() const {
  if (kind == Kind::Base) return true;
  return inputs.size() == 1 && inputs[0].expr->is_chain();
}

std::vector<const KnotExpression*> KnotExpression::leaves() const {
  if (kind == Kind::Base) return {this};
  std::vector<const KnotExpression*> out;
  for (const auto& in : inputs) {
    auto sub = in.expr->leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

bool operator==(const KnotExpression& a, const KnotExpression& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == KnotExpression::Kind::Base) return a.knot == b.knot && a.arf == b.arf;
  if (a.op->name != b.op->name || !(a.op->pattern == b.op->pattern) || a.op->alpha_order != b.op->alpha_order) return false;
  if (a.inputs.size() != b.inputs.size()) return false;
  for (std::size_t i = 0; i < a.inputs.size(); ++i)
    if (a.inputs[i].alpha_order != b.inputs[i].alpha_order || !(*a.inputs[i].expr == *b.inputs[i].expr)) return false;
  return true;
}

KnotExpression base_expression(const SeifertMatrix& knot) {
  KnotExpression e;
  e.kind = KnotExpression::Kind::Base;
  e.knot = knot;
  e.arf = arf(knot);
  return e;
}

KnotExpression apply_operator(const DoublingOperator& op, const KnotExpression& input) {
  return apply_operator(op, {{op.alpha_order, input}});
}

KnotExpression apply_operator(const DoublingOperator& op, const std::vector<std::pair<LaurentPoly, KnotExpression>>& inputs) {
  if (inputs.empty()) throw DomainError("operator " + op.name + " needs at least one input");
  const LaurentPoly exponent = module_exponent(op.pattern);
  KnotExpression e;
  e.kind = KnotExpression::Kind::Apply;
  e.op = std::make_shared<const DoublingOperator>(op);
  for (const auto& [order, sub] : inputs) {
    if (order.is_zero() || !divides(order, exponent))
      throw DomainError("curve order " + order.to_string() + " is not an element order in the Alexander module of " + op.name);
    e.inputs.push_back({normalize(order), std::make_shared<const KnotExpression>(sub)});
  }
  return e;
}

KnotExpression compose(const std::vector<DoublingOperator>& ops, const KnotExpression& base) {
  if (ops.empty()) throw DomainError("compose needs at least one operator");
  KnotExpression e = base;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) e = apply_operator(*it, e);
  return e;
}

std::vector<PolySequence> order_sequences(const KnotExpression& expr) {
  if (expr.kind == KnotExpression::Kind::Base) return {PolySequence{}};
  std::vector<PolySequence> out;
  for (const auto& in : expr.inputs)
    for (auto& tail : order_sequences(*in.expr)) {
      PolySequence s{in.alpha_order};
      s.insert(s.end(), tail.begin(), tail.end());
      out.push_back(std::move(s));
    }
  return out;
}

}  // namespace knotloc
