#include "knotloc/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "knotloc/error.hpp"

namespace knotloc {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object with field \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string str(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string("\"") + what + "\" must be a string");
  return j.get<std::string>();
}

bool boolean(const Json& j, const char* what) {
  if (!j.is_boolean()) throw InputError(std::string("\"") + what + "\" must be true or false");
  return j.get<bool>();
}

LaurentPoly poly(const Json& j, const char* what) { return parse_poly(str(j, what)); }

IntMatrix matrix(const Json& j) {
  if (!j.is_array()) throw InputError("a Seifert matrix must be an array of rows");
  IntMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError("a Seifert matrix row must be an array of integers");
    std::vector<long> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw InputError("Seifert matrix entries must be integers");
      r.push_back(x.get<long>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

// n >= 1 from the digits in s, or 0
unsigned positive_index(const std::string& s) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) return 0;
  if (s.front() == '0') return 0;
  return static_cast<unsigned>(std::stoul(s));
}

std::optional<SeifertMatrix> builtin_knot_matrix(const std::string& name) {
  if (name == "unknot") return knots::unknot();
  if (name == "trefoil") return knots::right_trefoil();
  if (name == "figure8") return knots::figure_eight();
  if (name == "cinquefoil") return knots::cinquefoil();
  if (name == "J") return knots::twisted_base();
  if (name.size() > 1 && name[0] == 'R' && name[1] != 'p')
    if (unsigned k = positive_index(name.substr(1))) return knots::ribbon(k);
  return std::nullopt;
}

// "Rp<k>" or "Rp<k>_<builtin knot>"
std::optional<std::pair<unsigned, std::string>> builtin_op_parts(const std::string& name) {
  if (name.rfind("Rp", 0) != 0) return std::nullopt;
  const auto us = name.find('_');
  const unsigned k = positive_index(name.substr(2, us == std::string::npos ? std::string::npos : us - 2));
  if (k == 0) return std::nullopt;
  std::string infection = "trefoil";
  if (us != std::string::npos) {
    infection = name.substr(us + 1);
    if (!builtin_knot_matrix(infection)) return std::nullopt;
  }
  return std::make_pair(k, infection);
}

bool same_operator(const DoublingOperator& a, const DoublingOperator& b) {
  return a.name == b.name && a.pattern == b.pattern && a.alpha_order == b.alpha_order &&
         operator_to_json(a) == operator_to_json(b);
}

Json trail_json(const std::vector<TrailEntry>& trail) {
  Json a = Json::array();
  for (const auto& t : trail) a.push_back({{"hypothesis", t.hypothesis}, {"outcome", t.outcome}, {"cite", t.cite}});
  return a;
}

std::vector<TrailEntry> trail_from_json(const Json& j) {
  std::vector<TrailEntry> out;
  if (!j.is_array()) throw InputError("\"trail\" must be an array");
  for (const auto& t : j)
    out.push_back({str(field(t, "hypothesis"), "hypothesis"), boolean(field(t, "outcome"), "outcome"), str(field(t, "cite"), "cite")});
  return out;
}

Submodule::Label label_from_string(const std::string& s) {
  for (auto l : {Submodule::Label::P0, Submodule::Label::Pplus, Submodule::Label::Pminus, Submodule::Label::Full,
                 Submodule::Label::Other})
    if (to_string(l) == s) return l;
  throw InputError("unknown submodule label \"" + s + "\"");
}

std::optional<CertifiedReal> value_from_json(const Json& e, const std::string& provenance) {
  if (e.contains("exact_value") && !e["exact_value"].is_null()) {
    CertifiedReal r{parse_real(str(e["exact_value"], "exact_value")), std::nullopt, provenance};
    if (e.contains("digits") && !e["digits"].is_null()) {
      if (!e["digits"].is_number_unsigned()) throw InputError("\"digits\" must be a nonnegative integer");
      r.digits = e["digits"].get<unsigned>();
    }
    return r;
  }
  if (!e.contains("value") || e["value"].is_null()) return std::nullopt;
  const Json& v = e["value"];
  CertifiedReal r{0, std::nullopt, provenance};
  if (v.is_number_integer()) {
    r.value = Rational(v.dump());
  } else if (v.is_number_float() || v.is_string()) {
    const std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    if (text.find_first_of("eE") != std::string::npos)
      throw InputError("signature value " + text + " uses exponent notation; write it as a decimal or fraction string");
    r.value = parse_real(text, &r.digits);
  } else {
    throw InputError("signature \"value\" must be a number, a string or null");
  }
  return r;
}

}  // namespace

// ---- workspace

bool Workspace::builtin_knot(const std::string& name) { return builtin_knot_matrix(name).has_value(); }
bool Workspace::builtin_op(const std::string& name) { return builtin_op_parts(name).has_value(); }

bool Workspace::has_knot(const std::string& name) const { return knots_.count(name) || builtin_knot(name); }
bool Workspace::has_op(const std::string& name) const { return ops_.count(name) || builtin_op(name); }

void Workspace::add_knot(const SeifertMatrix& knot) {
  const std::string& name = knot.name();
  if (name.empty()) throw DomainError("workspace knots need a name");
  if (has_knot(name) && !(this->knot(name) == knot)) throw DomainError("knot name \"" + name + "\" is already bound to a different matrix");
  knots_.insert_or_assign(name, knot);
}

void Workspace::add_operator(const DoublingOperator& op) {
  if (op.name.empty()) throw DomainError("workspace operators need a name");
  if (ops_.count(op.name) && !same_operator(ops_.at(op.name), op))
    throw DomainError("operator name \"" + op.name + "\" is already bound to different data");
  if (!ops_.count(op.name) && builtin_op(op.name) && !same_operator(this->op(op.name), op))
    throw DomainError("operator name \"" + op.name + "\" is reserved for a builtin operator");
  ops_.insert_or_assign(op.name, op);
}

void Workspace::add_expression(const std::string& name, const KnotExpression& expr) {
  if (name.empty()) throw DomainError("workspace expressions need a name");
  auto it = exprs_.find(name);
  if (it != exprs_.end() && !(it->second == expr)) throw DomainError("expression name \"" + name + "\" is already bound");
  exprs_.insert_or_assign(name, expr);
}

SeifertMatrix Workspace::knot(const std::string& name) const {
  if (auto it = knots_.find(name); it != knots_.end()) return it->second;
  if (auto b = builtin_knot_matrix(name)) return *b;
  throw InputError("unknown knot \"" + name + "\" (builtins: unknot, trefoil, figure8, cinquefoil, J, R<k>)");
}

DoublingOperator Workspace::op(const std::string& name) const {
  if (auto it = ops_.find(name); it != ops_.end()) return it->second;
  if (auto it = builtin_ops_.find(name); it != builtin_ops_.end()) return it->second;
  if (auto parts = builtin_op_parts(name)) {
    DoublingOperator op = standard_robust_operator(parts->first, *builtin_knot_matrix(parts->second));
    op.name = name;
    return builtin_ops_.emplace(name, std::move(op)).first->second;
  }
  throw InputError("unknown operator \"" + name + "\" (builtins: Rp<k>, Rp<k>_<knot>)");
}

const KnotExpression& Workspace::expression(const std::string& name) const {
  auto it = exprs_.find(name);
  if (it == exprs_.end()) throw InputError("unknown expression \"" + name + "\"");
  return it->second;
}

void Workspace::load(const Json& doc) {
  if (!doc.is_object()) throw InputError("a workspace document must be an object");
  if (doc.contains("config")) {
    const Json& c = doc["config"];
    if (c.contains("bound")) {
      if (!c["bound"].is_number_integer() || c["bound"].get<long>() <= 0) throw InputError("config bound must be a positive integer");
      config.bound = c["bound"].get<long>();
    }
    if (c.contains("precision")) {
      if (!c["precision"].is_number_unsigned() || c["precision"].get<unsigned>() == 0)
        throw InputError("config precision must be a positive integer");
      config.precision = c["precision"].get<unsigned>();
    }
  }
  if (doc.contains("knots"))
    for (const auto& k : doc["knots"]) add_knot(knot_from_json(k, *this));
  if (doc.contains("operators"))
    for (const auto& o : doc["operators"]) add_operator(operator_from_json(o, *this));
  if (doc.contains("expressions")) {
    if (!doc["expressions"].is_object()) throw InputError("\"expressions\" must map names to expressions");
    for (const auto& [name, e] : doc["expressions"].items()) add_expression(name, expression_from_json(e, *this));
  }
}

Json Workspace::to_json() const {
  Json j;
  j["config"] = {{"bound", config.bound}, {"precision", config.precision}};
  j["knots"] = Json::array();
  for (const auto& [_, k] : knots_) j["knots"].push_back(knot_to_json(k));
  j["operators"] = Json::array();
  for (const auto& [_, o] : ops_) j["operators"].push_back(operator_to_json(o));
  j["expressions"] = Json::object();
  for (const auto& [n, e] : exprs_) j["expressions"][n] = expression_to_json(e);
  return j;
}

// ---- documents

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// ---- polynomials

Json to_json(const LaurentPoly& p) { return p.to_string(); }

Json to_json(const Factorization& f) {
  Json fs = Json::array();
  for (const auto& [g, m] : f.factors) fs.push_back({{"factor", g.to_string()}, {"multiplicity", m}});
  return {{"unit", to_string(f.unit)}, {"shift", f.shift}, {"factors", fs}};
}

// ---- knots

Json knot_to_json(const SeifertMatrix& V) {
  Json m = Json::array();
  for (const auto& row : V.entries()) m.push_back(row);
  return {{"name", V.name()}, {"seifert", m}};
}

SeifertMatrix knot_from_json(const Json& j, const Workspace& ws) {
  if (j.is_string()) return ws.knot(j.get<std::string>());
  const std::string name = j.contains("name") ? str(j["name"], "name") : "";
  return SeifertMatrix(matrix(field(j, "seifert")), name);
}

// ---- isogeny

Json to_json(const IsogenyVerdict& v) {
  Json j;
  j["status"] = v.isogenous() ? "isogenous" : "strongly_coprime";
  j["exact"] = v.exact;
  j["witness"] = v.witness ? Json{{"n", v.witness->n}, {"k", v.witness->k}} : Json(nullptr);
  j["bound"] = v.bound ? Json(*v.bound) : Json(nullptr);
  return j;
}

IsogenyVerdict isogeny_verdict_from_json(const Json& j) {
  IsogenyVerdict v{IsogenyVerdict::Status::StronglyCoprime, true, std::nullopt, std::nullopt};
  const std::string s = str(field(j, "status"), "status");
  if (s == "isogenous")
    v.status = IsogenyVerdict::Status::Isogenous;
  else if (s != "strongly_coprime")
    throw InputError("unknown isogeny status \"" + s + "\"");
  v.exact = boolean(field(j, "exact"), "exact");
  if (j.contains("witness") && !j["witness"].is_null())
    v.witness = Witness{field(j["witness"], "n").get<long>(), field(j["witness"], "k").get<long>()};
  if (j.contains("bound") && !j["bound"].is_null()) v.bound = j["bound"].get<long>();
  return v;
}

Json to_json(const TupleVerdict& v) {
  Json entries = Json::array();
  const std::size_t last = v.strongly_coprime ? v.index : v.entries.size();
  for (std::size_t i = 0; i < last && i < v.entries.size(); ++i) {
    Json e = i == 0 ? Json{{"status", v.entries[0].strongly_coprime() ? "coprime" : "common_factor"}} : to_json(v.entries[i]);
    e["index"] = i + 1;
    e["mode"] = i == 0 ? "plain" : "strong";
    entries.push_back(e);
  }
  Json j;
  j["strongly_coprime"] = v.strongly_coprime;
  j["index"] = v.strongly_coprime ? Json(v.index) : Json(nullptr);
  j["mode"] = v.strongly_coprime ? Json(v.mode == TupleVerdict::Mode::PlainCoprime ? "plain" : "strong") : Json(nullptr);
  j["exact"] = v.exact;
  j["entries"] = entries;
  return j;
}

// ---- signatures

Json to_json(const SignatureProfile& p, unsigned digits) {
  Json jumps = Json::array();
  for (const auto& jp : p.jumps)
    jumps.push_back({{"factor", jp.factor.to_string()},
                     {"theta_over_pi", jump_theta_over_pi(jp, digits)},
                     {"exact_theta_over_pi", jp.theta_over_pi ? Json(to_string(*jp.theta_over_pi)) : Json(nullptr)}});
  Json arcs = Json::array();
  for (const auto& a : p.arcs) arcs.push_back(a.signature);
  return {{"jumps", jumps}, {"arc_signatures", arcs}};
}

Json to_json(const Rho0Value& r) {
  return {{"rho0", r.numeric}, {"precision", r.precision}, {"exact", r.exact ? Json(to_string(*r.exact)) : Json(nullptr)}};
}

// ---- modules

Json to_json(const Submodule& s) { return {{"generator", s.generator.to_string()}, {"label", to_string(s.label)}}; }

Json to_json(const LocalizationVerdict& v) {
  Json killed = Json::array();
  for (const auto& k : v.killed) killed.push_back(k.to_string());
  return {{"status", to_string(v.status)},
          {"survivor", v.survivor.to_string()},
          {"killed", killed},
          {"mode", to_string(v.mode)},
          {"exact", v.exact}};
}

LocalizationVerdict localization_verdict_from_json(const Json& j) {
  LocalizationVerdict v{LocalizationVerdict::Status::Torsion, LocalizationVerdict::Mode::ClassicalCoprime, LaurentPoly(1), {}, true};
  const std::string s = str(field(j, "status"), "status");
  bool ok = false;
  for (auto st : {LocalizationVerdict::Status::Torsion, LocalizationVerdict::Status::TorsionFree, LocalizationVerdict::Status::Mixed})
    if (to_string(st) == s) v.status = st, ok = true;
  if (!ok) throw InputError("unknown localization status \"" + s + "\"");
  const std::string m = str(field(j, "mode"), "mode");
  if (m == to_string(LocalizationVerdict::Mode::StrongCoprime))
    v.mode = LocalizationVerdict::Mode::StrongCoprime;
  else if (m != to_string(LocalizationVerdict::Mode::ClassicalCoprime))
    throw InputError("unknown localization mode \"" + m + "\"");
  v.survivor = poly(field(j, "survivor"), "survivor");
  for (const auto& k : field(j, "killed")) v.killed.push_back(poly(k, "killed"));
  v.exact = boolean(field(j, "exact"), "exact");
  return v;
}

// ---- operators

Json operator_to_json(const DoublingOperator& op) {
  Json j;
  j["name"] = op.name;
  j["pattern_name"] = op.pattern.name();
  j["pattern_seifert"] = knot_to_json(op.pattern)["seifert"];
  j["alpha_order"] = op.alpha_order.to_string();
  if (!op.certificate) {
    j["robust"] = nullptr;
    return j;
  }
  Json sigs = Json::array();
  for (const auto& e : op.certificate->signatures) {
    Json s{{"submodule", to_string(e.submodule)}, {"kind", to_string(e.kind)}, {"provenance", e.provenance}};
    if (e.value) {
      s["value"] = e.value->approx();
      s["exact_value"] = to_string(e.value->value);
      s["digits"] = e.value->digits ? Json(*e.value->digits) : Json(nullptr);
    } else {
      s["value"] = nullptr;
    }
    sigs.push_back(s);
  }
  j["robust"] = {{"delta", op.certificate->delta.to_string()}, {"signatures", sigs}, {"notes", op.certificate->notes}};
  return j;
}

DoublingOperator operator_from_json(const Json& j, const Workspace& ws) {
  if (j.is_string()) return ws.op(j.get<std::string>());
  const std::string name = str(field(j, "name"), "name");
  SeifertMatrix pattern;
  if (j.contains("pattern_seifert"))
    pattern = SeifertMatrix(matrix(j["pattern_seifert"]), j.contains("pattern_name") ? str(j["pattern_name"], "pattern_name") : "");
  else
    pattern = knot_from_json(field(j, "pattern"), ws);
  const LaurentPoly alpha = poly(field(j, "alpha_order"), "alpha_order");
  std::optional<RobustCertificate> cert;
  if (j.contains("robust") && !j["robust"].is_null()) {
    const Json& r = j["robust"];
    RobustCertificate c;
    c.delta = poly(field(r, "delta"), "delta");
    if (r.contains("notes")) c.notes = str(r["notes"], "notes");
    for (const auto& e : field(r, "signatures")) {
      SignatureEntry s;
      s.submodule = label_from_string(str(field(e, "submodule"), "submodule"));
      const std::string kind = str(field(e, "kind"), "kind");
      if (kind == to_string(SignatureEntry::Kind::Nonzero))
        s.kind = SignatureEntry::Kind::Nonzero;
      else if (kind == to_string(SignatureEntry::Kind::Ribbon))
        s.kind = SignatureEntry::Kind::Ribbon;
      else
        throw InputError("signature kind must be \"nonzero\" or \"ribbon\", not \"" + kind + "\"");
      s.provenance = e.contains("provenance") ? str(e["provenance"], "provenance") : "";
      s.value = value_from_json(e, s.provenance);
      c.signatures.push_back(std::move(s));
    }
    cert = std::move(c);
  }
  return make_operator(name, pattern, alpha, std::move(cert));
}

Json to_json(const RobustnessReport& r) {
  Json missing = Json::array(), iso = Json::array();
  for (auto l : r.missing) missing.push_back(to_string(l));
  for (auto l : r.isotropic) iso.push_back(to_string(l));
  return {{"status", to_string(r.status)}, {"reasons", r.reasons}, {"missing", missing}, {"isotropic", iso}};
}

// ---- expressions

Json expression_to_json(const KnotExpression& e) {
  if (e.kind == KnotExpression::Kind::Base)
    return {{"base", e.knot.name().empty() ? knot_to_json(e.knot) : Json(e.knot.name())}, {"arf", e.arf}};
  Json inputs = Json::array();
  for (const auto& in : e.inputs) inputs.push_back({{"alpha_order", in.alpha_order.to_string()}, {"expr", expression_to_json(*in.expr)}});
  return {{"op", e.op->name}, {"inputs", inputs}};
}

KnotExpression expression_from_json(const Json& j, const Workspace& ws) {
  if (j.is_string()) return ws.expression(j.get<std::string>());
  if (!j.is_object()) throw InputError("an expression must be an object or a workspace name");
  if (j.contains("base")) {
    KnotExpression e = base_expression(knot_from_json(j["base"], ws));
    if (j.contains("arf")) {
      if (!j["arf"].is_number_integer() || (j["arf"] != 0 && j["arf"] != 1)) throw InputError("\"arf\" must be 0 or 1");
      if (j["arf"].get<int>() != e.arf)
        throw DomainError("base " + e.knot.name() + " is declared with Arf invariant " + j["arf"].dump() + " but has " +
                          std::to_string(e.arf));
    }
    return e;
  }
  const DoublingOperator op = operator_from_json(field(j, "op"), ws);
  const Json& ins = field(j, "inputs");
  if (!ins.is_array() || ins.empty()) throw InputError("\"inputs\" must be a nonempty array");
  std::vector<std::pair<LaurentPoly, KnotExpression>> inputs;
  for (const auto& in : ins) {
    const LaurentPoly order = in.contains("alpha_order") ? poly(in["alpha_order"], "alpha_order") : op.alpha_order;
    inputs.emplace_back(order, expression_from_json(field(in, "expr"), ws));
  }
  return apply_operator(op, inputs);
}

Json expression_bundle(const KnotExpression& e) {
  std::map<std::string, Json> knots, ops;
  Workspace builtins;
  std::function<void(const KnotExpression&)> walk = [&](const KnotExpression& x) {
    if (x.kind == KnotExpression::Kind::Base) {
      const std::string& n = x.knot.name();
      if (!n.empty() && !(Workspace::builtin_knot(n) && builtins.knot(n) == x.knot)) knots.emplace(n, knot_to_json(x.knot));
      return;
    }
    const std::string& n = x.op->name;
    if (!ops.count(n) && !(Workspace::builtin_op(n) && same_operator(builtins.op(n), *x.op))) ops.emplace(n, operator_to_json(*x.op));
    for (const auto& in : x.inputs) walk(*in.expr);
  };
  walk(e);
  Json j;
  j["knots"] = Json::array();
  for (auto& [_, k] : knots) j["knots"].push_back(std::move(k));
  j["operators"] = Json::array();
  for (auto& [_, o] : ops) j["operators"].push_back(std::move(o));
  j["expr"] = expression_to_json(e);
  return j;
}

KnotExpression load_expression(const Json& j, Workspace& ws) {
  if (j.is_object() && j.contains("expr")) {
    ws.load(j);
    return expression_from_json(j["expr"], ws);
  }
  return expression_from_json(j, ws);
}

// ---- verdicts

Json to_json(const ObstructionVerdict& v) {
  return {{"status", to_string(v.status)}, {"exact", v.exact}, {"trail", trail_json(v.trail)}};
}

ObstructionVerdict obstruction_verdict_from_json(const Json& j) {
  ObstructionVerdict v;
  const std::string s = str(field(j, "status"), "status");
  bool ok = false;
  for (auto st : {ObstructionVerdict::Status::VanishesAtP, ObstructionVerdict::Status::SurvivesAtP, ObstructionVerdict::Status::Inconclusive})
    if (to_string(st) == s) v.status = st, ok = true;
  if (!ok) throw InputError("unknown verdict status \"" + s + "\"");
  v.exact = boolean(field(j, "exact"), "exact");
  v.trail = trail_from_json(field(j, "trail"));
  return v;
}

std::vector<FamilySpec> families_from_json(const Json& j, const Workspace& ws) {
  const Json& fams = field(j, "families");
  if (!fams.is_array()) throw InputError("\"families\" must be an array");
  std::vector<FamilySpec> out;
  for (const auto& f : fams) {
    FamilySpec s;
    const Json& idx = field(f, "index");
    if (idx.is_string()) {
      s.index = parse_sequence(idx.get<std::string>());
    } else if (idx.is_array()) {
      for (const auto& p : idx) s.index.push_back(poly(p, "index"));
    } else {
      throw InputError("\"index\" must be a \"p:..;p:..\" string or an array of polynomials");
    }
    for (const auto& o : field(f, "chain")) s.chain.push_back(operator_from_json(o, ws));
    for (const auto& b : field(f, "bases")) s.bases.push_back(knot_from_json(b, ws));
    out.push_back(std::move(s));
  }
  return out;
}

Json to_json(const FamilyCertificate& c) {
  Json j;
  j["conclusion"] = to_string(c.conclusion);
  j["rho0_status"] = to_string(c.rho0_status);
  j["rho0_provenance"] = c.rho0_provenance;
  Json rel = Json::array();
  for (const auto& x : c.relation) rel.push_back(x.get_str());
  j["relation"] = rel;
  Json idx = Json::array();
  for (const auto& s : c.indices) idx.push_back(format_sequence(s));
  j["indices"] = idx;
  Json pw = Json::array();
  for (const auto& row : c.pairwise) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(cell ? to_json(*cell) : Json(nullptr));
    pw.push_back(r);
  }
  j["pairwise"] = pw;
  Json members = Json::array();
  for (const auto& m : c.members) members.push_back({{"family", m.family + 1}, {"expr", expression_to_json(m.expr)}});
  j["members"] = members;
  j["trail"] = trail_json(c.trail);
  return j;
}

Json to_json(const InjectivityReport& r) {
  return {{"status", to_string(r.status)}, {"scope", r.scope}, {"trail", trail_json(r.trail)}};
}

Json to_json(const FractalTree& t) {
  Json paths = Json::array();
  for (const auto& p : t.paths) {
    Json ops = Json::array();
    for (std::size_t i : p.ops) ops.push_back(t.names[i]);
    paths.push_back({{"ops", ops}, {"tuple", format_sequence(p.tuple)}, {"coprime_to_others", p.coprime_to_others}});
  }
  return {{"depth", t.depth}, {"names", t.names}, {"paths", paths}, {"pairwise_strongly_coprime", t.pairwise_strongly_coprime}};
}

}  // namespace knotloc
