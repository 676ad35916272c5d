#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotloc/isogeny.hpp"
#include "knotloc/operators.hpp"
#include "knotloc/seifert.hpp"

namespace knotloc {

struct TrailEntry {
  std::string hypothesis;
  bool outcome = false;
  std::string cite;
};

/// Decision about membership of a knot in the filtration localized at P.
struct ObstructionVerdict {
  enum class Status { VanishesAtP, SurvivesAtP, Inconclusive };
  Status status = Status::Inconclusive;
  std::vector<TrailEntry> trail;
  bool exact = true;
};

std::string to_string(ObstructionVerdict::Status s);

/// Citation tags carried by trail entries.
namespace cite {
inline constexpr const char* kArf = "base knot has Arf invariant zero";
inline constexpr const char* kVanishing = "strongly coprime order sequences vanish in the P-localized filtration";
inline constexpr const char* kBranching = "every root-to-leaf order sequence must be strongly coprime";
inline constexpr const char* kRobust = "robust operator: cyclic delta*delta' module and certified first-order signatures";
inline constexpr const char* kOrderMatch = "survival needs P to match the curve orders, outermost first";
inline constexpr const char* kRho0Numeric = "numeric guard: integer relation search";
inline constexpr const char* kRho0Asserted = "rho0 of the base meets the first-order signatures of the innermost operator trivially";
inline constexpr const char* kPairwise = "family indices must be pairwise strongly coprime";
inline constexpr const char* kInjectivity = "robust operators with coprime Alexander polynomials have disjoint images";
}  // namespace cite

/// VanishesAtP iff every order sequence of expr is strongly coprime to P
/// (index 1 plain coprimality, later indices strong). Inconclusive otherwise.
/// Throws DomainError on a depth mismatch or a base knot with Arf invariant 1.
ObstructionVerdict vanishing_verdict(const KnotExpression& expr, const PolySequence& P, long bound = kDefaultIsogenyBound);

/// The assertion that the rational span of rho0 of the base knots meets the span
/// of the first-order signatures of the innermost operator only in zero. An empty
/// provenance means the assertion was not made.
struct Rho0Hypothesis {
  std::string provenance;
};

/// SurvivesAtP iff every operator of the chain is robust, P matches the curve
/// orders entry by entry up to units, no numeric relation ties rho0(base) to the
/// innermost operator's first-order signatures, and the span hypothesis is asserted.
/// Throws DomainError for branching expressions, depth mismatch, or Arf 1 bases.
ObstructionVerdict survival_verdict(const KnotExpression& expr, const PolySequence& P, const Rho0Hypothesis& hypothesis,
                                    unsigned precision = kDefaultPrecision);

struct RelationResult {
  bool found = false;
  std::vector<Integer> coefficients;  // sum c_i x_i = 0 to the working precision
  unsigned digits = 0;                // working precision in decimal places
  bool verified_exactly = false;      // every value was exact and the relation holds exactly
};

/// Integer relation search on values known to their `digits` (or exactly). The
/// working precision is min(precision, digits of the inputs); it must be at least
/// n*log10(max_coeff) + 6 or DomainError is thrown. With `involving`, only
/// relations with a nonzero coefficient at that index count.
RelationResult rho0_relation_falsifier(const std::vector<CertifiedReal>& values, const Integer& max_coeff = 1000000,
                                       unsigned precision = kDefaultPrecision,
                                       std::optional<std::size_t> involving = std::nullopt);
RelationResult rho0_relation_falsifier(const std::vector<Rho0Value>& values, const Integer& max_coeff = 1000000,
                                       unsigned precision = kDefaultPrecision);

/// One family: a chain of operators (outermost first) applied to each base knot,
/// claimed to realize the index sequence.
struct FamilySpec {
  PolySequence index;
  std::vector<DoublingOperator> chain;
  std::vector<SeifertMatrix> bases;
};

struct FamilyCertificate {
  enum class Rho0Status { RefutedRelation, AssertedIndependent, Inconclusive };
  enum class Conclusion { IndependentCertified, Refuted, Conditional };
  struct Member {
    KnotExpression expr;
    std::size_t family;
  };
  std::vector<Member> members;
  std::vector<PolySequence> indices;
  std::vector<std::vector<std::optional<TupleVerdict>>> pairwise;  // empty diagonal
  Rho0Status rho0_status = Rho0Status::Inconclusive;
  std::vector<Integer> relation;  // for RefutedRelation: coefficients on (rho0(base), FOS values...)
  std::string rho0_provenance;
  Conclusion conclusion = Conclusion::Conditional;
  std::vector<TrailEntry> trail;
};

std::string to_string(FamilyCertificate::Rho0Status s);
std::string to_string(FamilyCertificate::Conclusion c);

/// All chains must have the same depth (DomainError otherwise). Every other
/// failure is recorded in the certificate.
FamilyCertificate family_certificate(const std::vector<FamilySpec>& families, const std::string& rho0_provenance,
                                     long bound = kDefaultIsogenyBound, unsigned precision = kDefaultPrecision);

struct InjectivityReport {
  enum class Status { DisjointImagesOnSubgroup, SamePolynomial, Inconclusive };
  Status status = Status::Inconclusive;
  std::vector<TrailEntry> trail;
  std::string scope;
};

std::string to_string(InjectivityReport::Status s);

InjectivityReport injectivity_report(const DoublingOperator& a, const DoublingOperator& b);

struct FractalPath {
  std::vector<std::size_t> ops;  // family indices, outermost first
  PolySequence tuple;            // curve orders, outermost first
  bool coprime_to_others = true;
};

struct FractalTree {
  std::size_t depth = 0;
  std::vector<std::string> names;
  std::vector<FractalPath> paths;  // lexicographic in ops
  bool pairwise_strongly_coprime = true;
};

/// All family^depth compositions of robust operators with their order tuples.
/// Throws DomainError for depth 0, an empty family, or a non-robust operator.
FractalTree fractal_tree(std::size_t depth, const std::vector<DoublingOperator>& family, long bound = kDefaultIsogenyBound);
std::string fractal_tree_dot(const FractalTree& tree);

}  // namespace knotloc
