#pragma once

#include <json.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "knotloc/alexander.hpp"
#include "knotloc/factor.hpp"
#include "knotloc/isogeny.hpp"
#include "knotloc/operators.hpp"
#include "knotloc/oracle.hpp"
#include "knotloc/seifert.hpp"

namespace knotloc {

using Json = nlohmann::json;

struct Config {
  long bound = kDefaultIsogenyBound;
  unsigned precision = kDefaultPrecision;
};

/// Named knots, operators and expressions. Lookups fall back to the builtins:
/// knots unknot, trefoil, figure8, cinquefoil, J, R<k>; operators Rp<k>.
class Workspace {
 public:
  Config config;

  /// Throws DomainError on an empty name or a name bound to different data.
  void add_knot(const SeifertMatrix& knot);
  void add_operator(const DoublingOperator& op);
  void add_expression(const std::string& name, const KnotExpression& expr);

  SeifertMatrix knot(const std::string& name) const;
  DoublingOperator op(const std::string& name) const;
  const KnotExpression& expression(const std::string& name) const;

  bool has_knot(const std::string& name) const;
  bool has_op(const std::string& name) const;
  static bool builtin_knot(const std::string& name);
  static bool builtin_op(const std::string& name);

  /// Reads {"knots": [...], "operators": [...], "expressions": {name: expr}}; every key optional.
  void load(const Json& doc);
  Json to_json() const;

 private:
  std::map<std::string, SeifertMatrix> knots_;
  std::map<std::string, DoublingOperator> ops_;
  std::map<std::string, KnotExpression> exprs_;
  mutable std::map<std::string, DoublingOperator> builtin_ops_;
};

/// Parses a JSON document; InputError on malformed text.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

Json to_json(const LaurentPoly& p);
Json to_json(const Factorization& f);

Json knot_to_json(const SeifertMatrix& V);
/// A knot object, or a string naming a workspace or builtin knot.
SeifertMatrix knot_from_json(const Json& j, const Workspace& ws);

Json to_json(const IsogenyVerdict& v);
IsogenyVerdict isogeny_verdict_from_json(const Json& j);
Json to_json(const TupleVerdict& v);

Json to_json(const SignatureProfile& p, unsigned digits);
Json to_json(const Rho0Value& r);

Json to_json(const Submodule& s);
Json to_json(const LocalizationVerdict& v);
LocalizationVerdict localization_verdict_from_json(const Json& j);

Json operator_to_json(const DoublingOperator& op);
/// Validates through make_operator.
DoublingOperator operator_from_json(const Json& j, const Workspace& ws);
Json to_json(const RobustnessReport& r);

Json expression_to_json(const KnotExpression& e);
KnotExpression expression_from_json(const Json& j, const Workspace& ws);
/// {"knots", "operators", "expr"} carrying every non-builtin knot and operator the expression uses.
Json expression_bundle(const KnotExpression& e);
/// A bare expression or a bundle; bundle definitions are added to `ws`.
KnotExpression load_expression(const Json& j, Workspace& ws);

Json to_json(const ObstructionVerdict& v);
ObstructionVerdict obstruction_verdict_from_json(const Json& j);

/// {"families": [{"index": "p:..;p:..", "chain": [op...], "bases": [knot...]}], "provenance": str}
std::vector<FamilySpec> families_from_json(const Json& j, const Workspace& ws);
Json to_json(const FamilyCertificate& c);

Json to_json(const InjectivityReport& r);
Json to_json(const FractalTree& t);

}  // namespace knotloc
