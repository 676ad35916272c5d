#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "knotloc/alexander.hpp"
#include "knotloc/isogeny.hpp"
#include "knotloc/seifert.hpp"

namespace knotloc {

/// A real number entering from outside the computation, or derived from one.
/// `digits` is nullopt when `value` is exact, otherwise the number of correct
/// decimal places.
struct CertifiedReal {
  Rational value;
  std::optional<unsigned> digits;
  std::string provenance;

  bool exact() const { return !digits.has_value(); }
  std::string decimal(unsigned places) const;
  double approx() const { return value.get_d(); }
};

/// A decimal or fraction string ("-1.25", "-4/3") as an exact rational. The
/// number of decimal places is reported through `digits` (nullopt for fractions
/// and integers).
Rational parse_real(const std::string& text, std::optional<unsigned>* digits = nullptr);

CertifiedReal from_rho0(const Rho0Value& v, const std::string& provenance);

/// One first-order signature entry of a robustness certificate.
struct SignatureEntry {
  enum class Kind { Nonzero, Ribbon };
  Submodule::Label submodule = Submodule::Label::P0;  // P0, P+ or P-
  Kind kind = Kind::Nonzero;
  std::optional<CertifiedReal> value;                 // the asserted signature, when known
  std::string provenance;
};

std::string to_string(SignatureEntry::Kind k);

/// Data for the signature half of robustness. P+ is <delta>, P- is
/// <reciprocal(delta)>; when the two agree only P0 and P+ are used.
struct RobustCertificate {
  LaurentPoly delta;
  std::vector<SignatureEntry> signatures;
  std::string notes;
};

/// Infection on the ribbon pattern along a curve alpha whose class has order
/// alpha_order in the Alexander module of the pattern. lk(R, alpha) = 0 and
/// ribbon-ness of the pattern are assumed, not checked.
struct DoublingOperator {
  std::string name;
  SeifertMatrix pattern;
  LaurentPoly alpha_order;
  bool generates = false;  // alpha generates the Alexander module of the pattern
  std::optional<RobustCertificate> certificate;
};

/// Validates the operator data: alpha_order divides the module exponent of the
/// pattern, and a certificate has irreducible non-unit delta with
/// Delta(pattern) = delta * reciprocal(delta) up to units.
DoublingOperator make_operator(const std::string& name, const SeifertMatrix& pattern, const LaurentPoly& alpha_order,
                               std::optional<RobustCertificate> certificate = std::nullopt);

struct RobustnessReport {
  enum class Status { Robust, NotRobust, Conditional };
  Status status = Status::NotRobust;
  std::vector<std::string> reasons;           // failed checks for NotRobust
  std::vector<Submodule::Label> missing;      // isotropic submodules without an entry
  std::vector<Submodule::Label> isotropic;    // submodules the certificate has to cover
};

std::string to_string(RobustnessReport::Status s);

/// Robust iff the module is cyclic of order delta * reciprocal(delta) with
/// delta prime, alpha generates it, and every isotropic submodule carries a
/// nonzero signature or a ribbon disk. Conditional when only entries are missing.
RobustnessReport is_robust(const DoublingOperator& op);

/// First-order signatures of the trefoil-style infected pattern derived from a
/// base value and the rho0 of the infecting knot:
///   rho1(infected) = rho1(base pattern) + rho0(T),  rho(infected, P-) = rho0(T).
struct Rho1Bookkeeping {
  CertifiedReal rho1;
  CertifiedReal rho_minus;
};

Rho1Bookkeeping rho1_bookkeeping(const CertifiedReal& base_rho1, const Rho0Value& infection_rho0,
                                 const std::string& infection_name);

/// The robust operator on the genus-one ribbon pattern with Alexander
/// polynomial p_k: P+ = <kt-(k+1)> is the ribbon disk of one band, and the other
/// band is infected by `infection` so that P0 and P- carry rho0(infection).
/// `base_rho1` is the asserted first-order signature of the uninfected pattern.
DoublingOperator standard_robust_operator(unsigned k, const SeifertMatrix& infection = knots::right_trefoil(),
                                          const CertifiedReal& base_rho1 = {Rational(0), std::nullopt,
                                                                            "asserted: zero for the uninfected pattern"});

struct KnotExpression;

struct ExpressionInput {
  LaurentPoly alpha_order;
  std::shared_ptr<const KnotExpression> expr;
};

/// Either a base knot or an operator applied to one or more inputs, each along
/// its own curve. Immutable once built; subtrees are shared.
struct KnotExpression {
  enum class Kind { Base, Apply };
  Kind kind = Kind::Base;
  SeifertMatrix knot;  // Base
  int arf = 0;         // Base
  std::shared_ptr<const DoublingOperator> op;  // Apply
  std::vector<ExpressionInput> inputs;         // Apply

  /// Longest root-to-leaf path, counted in Apply nodes.
  std::size_t depth() const;
  bool is_chain() const;
  /// Base knots of all leaves, left to right.
  std::vector<const KnotExpression*> leaves() const;
};

bool operator==(const KnotExpression& a, const KnotExpression& b);

/// Leaf; the Arf invariant is computed from the matrix.
KnotExpression base_expression(const SeifertMatrix& knot);
/// Single-input node along the operator's own curve.
KnotExpression apply_operator(const DoublingOperator& op, const KnotExpression& input);
/// Multi-input node; each curve order must divide the module exponent of the pattern.
KnotExpression apply_operator(const DoublingOperator& op, const std::vector<std::pair<LaurentPoly, KnotExpression>>& inputs);

/// ops = [R^n, ..., R^1] gives R^n(...(R^1(base))).
KnotExpression compose(const std::vector<DoublingOperator>& ops, const KnotExpression& base);

/// One sequence per root-to-leaf path, outermost curve order first.
std::vector<PolySequence> order_sequences(const KnotExpression& expr);

}  // namespace knotloc
