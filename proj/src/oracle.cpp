#include "knotloc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "knotloc/error.hpp"
#include "relation.hpp"

namespace knotloc {

namespace {

Integer pow10(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

unsigned log10_ceil(const Integer& m) { return m <= 1 ? 0 : static_cast<unsigned>(std::ceil(std::log10(m.get_d()) - 1e-12)); }

std::string describe_tuple(const TupleVerdict& tv) {
  if (!tv.strongly_coprime) return "isogenous at every index";
  std::string s = "index " + std::to_string(tv.index) + (tv.mode == TupleVerdict::Mode::PlainCoprime ? " (plain gcd)" : " (strong)");
  if (!tv.exact) s += ", bounded sweep";
  return s;
}

void check_arf(const KnotExpression& expr, std::vector<TrailEntry>& trail) {
  for (const KnotExpression* leaf : expr.leaves())
    if (leaf->arf != 0)
      throw DomainError("base knot " + leaf->knot.name() + " has Arf invariant 1; the theorems need Arf zero");
  trail.push_back({"every base knot has Arf invariant 0", true, cite::kArf});
}

// FOS values carried by a certificate, in entry order
std::vector<CertifiedReal> fos_values(const DoublingOperator& op) {
  std::vector<CertifiedReal> out;
  if (!op.certificate) return out;
  for (const auto& e : op.certificate->signatures)
    if (e.value) out.push_back(*e.value);
  return out;
}

// Runs the falsifier on (rho0(base), FOS...) looking for relations through rho0(base).
// Returns the entry for the trail and the relation, if any.
TrailEntry rho0_guard(const SeifertMatrix& base, const std::vector<CertifiedReal>& fos, unsigned precision,
                      std::optional<RelationResult>* relation) {
  const std::size_t n = fos.size() + 1;
  unsigned work = std::max<unsigned>(precision, static_cast<unsigned>(6 * n + 6));
  for (const auto& f : fos)
    if (f.digits) work = std::min(work, *f.digits);
  const Rho0Value r = rho0(base, std::max<unsigned>(work, 1));
  std::vector<CertifiedReal> values{from_rho0(r, "rho0(" + base.name() + ")")};
  values.insert(values.end(), fos.begin(), fos.end());
  const long e = std::min<long>(6, (static_cast<long>(work) - 6) / static_cast<long>(n));
  const std::string what = "rho0(" + base.name() + ") = " + r.numeric.substr(0, std::min<std::size_t>(r.numeric.size(), 14));
  if (e < 1) {
    return {"no integer relation ties " + what + " to the first-order signatures (precision " + std::to_string(work) +
                " is too low to search)",
            false, cite::kRho0Numeric};
  }
  RelationResult res = rho0_relation_falsifier(values, pow10(static_cast<unsigned>(e)), work, 0);
  std::string hyp = "no integer relation with coefficients up to 10^" + std::to_string(e) + " ties " + what + " to " +
                    std::to_string(fos.size()) + " first-order signature value(s) at " + std::to_string(res.digits) + " digits";
  if (res.found) {
    std::string c;
    for (const auto& x : res.coefficients) c += (c.empty() ? "" : ",") + x.get_str();
    hyp += "; found (" + c + ")";
  }
  if (relation) *relation = res;
  return {hyp, !res.found, cite::kRho0Numeric};
}

std::string robust_line(const DoublingOperator& op, const RobustnessReport& r) {
  std::string s = "operator " + op.name + " is robust";
  if (r.status == RobustnessReport::Status::NotRobust && !r.reasons.empty()) s += " (" + r.reasons.front() + ")";
  if (r.status == RobustnessReport::Status::Conditional) {
    s += " (missing entries:";
    for (auto l : r.missing) s += " " + to_string(l);
    s += ")";
  }
  return s;
}

}  // namespace

std::string to_string(ObstructionVerdict::Status s) {
  switch (s) {
    case ObstructionVerdict::Status::VanishesAtP:
      return "vanishes_at_p";
    case ObstructionVerdict::Status::SurvivesAtP:
      return "survives_at_p";
    case ObstructionVerdict::Status::Inconclusive:
      return "inconclusive";
  }
  return "";
}

ObstructionVerdict vanishing_verdict(const KnotExpression& expr, const PolySequence& P, long bound) {
  ObstructionVerdict v;
  check_arf(expr, v.trail);
  const auto seqs = order_sequences(expr);
  for (const auto& q : seqs)
    if (q.size() != P.size())
      throw DomainError("depth mismatch: an order sequence has length " + std::to_string(q.size()) + " but P has length " +
                        std::to_string(P.size()));
  bool all = true;
  for (const auto& q : seqs) {
    const TupleVerdict tv = tuple_strongly_coprime(P, q, bound);
    v.exact = v.exact && tv.exact;
    all = all && tv.strongly_coprime;
    v.trail.push_back({"Q = " + format_sequence(q) + " is strongly coprime to P = " + format_sequence(P) + ": " + describe_tuple(tv),
                       tv.strongly_coprime, cite::kVanishing});
  }
  if (seqs.size() > 1)
    v.trail.push_back({"all " + std::to_string(seqs.size()) + " order sequences are strongly coprime to P", all, cite::kBranching});
  v.status = all ? ObstructionVerdict::Status::VanishesAtP : ObstructionVerdict::Status::Inconclusive;
  return v;
}

ObstructionVerdict survival_verdict(const KnotExpression& expr, const PolySequence& P, const Rho0Hypothesis& hypothesis,
                                    unsigned precision) {
  if (!expr.is_chain()) throw DomainError("survival_verdict needs a single chain of operators, not a branching expression");
  ObstructionVerdict v;
  check_arf(expr, v.trail);
  const auto seqs = order_sequences(expr);
  const PolySequence& q = seqs.front();
  if (q.size() != P.size())
    throw DomainError("depth mismatch: the chain has depth " + std::to_string(q.size()) + " but P has length " +
                      std::to_string(P.size()));
  bool ok = true;
  std::vector<const DoublingOperator*> chain;
  const KnotExpression* node = &expr;
  while (node->kind == KnotExpression::Kind::Apply) {
    chain.push_back(node->op.get());
    node = node->inputs[0].expr.get();
  }
  for (const DoublingOperator* op : chain) {
    const RobustnessReport r = is_robust(*op);
    const bool robust = r.status == RobustnessReport::Status::Robust;
    ok = ok && robust;
    v.trail.push_back({robust_line(*op, r), robust, cite::kRobust});
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    const bool match = unit_equal(P[i], q[i]);
    ok = ok && match;
    v.trail.push_back({"P entry " + std::to_string(i + 1) + " (" + P[i].to_string() + ") equals the order " + q[i].to_string() +
                           " of the curve at depth " + std::to_string(i + 1),
                       match, cite::kOrderMatch});
  }
  const TrailEntry guard = rho0_guard(node->knot, chain.empty() ? std::vector<CertifiedReal>{} : fos_values(*chain.back()),
                                      precision, nullptr);
  ok = ok && guard.outcome;
  v.trail.push_back(guard);
  const bool asserted = !hypothesis.provenance.empty();
  ok = ok && asserted;
  v.trail.push_back({asserted ? "rho0 span hypothesis asserted: " + hypothesis.provenance : "rho0 span hypothesis not asserted",
                     asserted, cite::kRho0Asserted});
  v.status = ok ? ObstructionVerdict::Status::SurvivesAtP : ObstructionVerdict::Status::Inconclusive;
  return v;
}

RelationResult rho0_relation_falsifier(const std::vector<CertifiedReal>& values, const Integer& max_coeff, unsigned precision,
                                       std::optional<std::size_t> involving) {
  if (values.empty()) throw DomainError("the relation search needs at least one value");
  if (max_coeff < 1) throw DomainError("max_coeff must be positive");
  if (involving && *involving >= values.size()) throw DomainError("involving index out of range");
  unsigned d = precision;
  bool all_exact = true;
  for (const auto& v : values)
    if (v.digits) {
      d = std::min(d, *v.digits);
      all_exact = false;
    }
  const unsigned need = static_cast<unsigned>(values.size()) * log10_ceil(max_coeff) + 6;
  if (d < need) {
    throw DomainError("insufficient precision: " + std::to_string(d) + " digits, but coefficients up to " + max_coeff.get_str() +
                      " on " + std::to_string(values.size()) + " values need at least " + std::to_string(need));
  }
  std::vector<Rational> x;
  for (const auto& v : values) x.push_back(v.value);
  const Rational tol = all_exact ? Rational(0) : Rational(1, 1) / Rational(pow10(d));
  RelationResult out;
  out.digits = d;
  for (auto& c : detail::small_relations(x, pow10(d), tol, max_coeff)) {
    if (involving && c[*involving] == 0) continue;
    out.found = true;
    out.coefficients = std::move(c);
    break;
  }
  if (out.found && all_exact) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += Rational(out.coefficients[i]) * x[i];
    out.verified_exactly = s == 0;
  }
  return out;
}

RelationResult rho0_relation_falsifier(const std::vector<Rho0Value>& values, const Integer& max_coeff, unsigned precision) {
  std::vector<CertifiedReal> v;
  for (const auto& r : values) v.push_back(from_rho0(r, "rho0"));
  return rho0_relation_falsifier(v, max_coeff, precision);
}

std::string to_string(FamilyCertificate::Rho0Status s) {
  switch (s) {
    case FamilyCertificate::Rho0Status::RefutedRelation:
      return "refuted_relation";
    case FamilyCertificate::Rho0Status::AssertedIndependent:
      return "asserted_independent";
    case FamilyCertificate::Rho0Status::Inconclusive:
      return "inconclusive";
  }
  return "";
}

std::string to_string(FamilyCertificate::Conclusion c) {
  switch (c) {
    case FamilyCertificate::Conclusion::IndependentCertified:
      return "independent-certified";
    case FamilyCertificate::Conclusion::Refuted:
      return "refuted";
    case FamilyCertificate::Conclusion::Conditional:
      return "conditional";
  }
  return "";
}

FamilyCertificate family_certificate(const std::vector<FamilySpec>& families, const std::string& rho0_provenance, long bound,
                                     unsigned precision) {
  FamilyCertificate cert;
  cert.rho0_provenance = rho0_provenance;
  for (const auto& f : families) {
    if (f.chain.empty()) throw DomainError("every family needs a nonempty operator chain");
    if (f.chain.size() != families.front().chain.size())
      throw DomainError("all chains must have the same depth (" + std::to_string(families.front().chain.size()) + " vs " +
                        std::to_string(f.chain.size()) + ")");
  }
  bool all_checks = true;
  auto record = [&](std::string hyp, bool outcome, const char* c) {
    all_checks = all_checks && outcome;
    cert.trail.push_back({std::move(hyp), outcome, c});
  };
  for (std::size_t i = 0; i < families.size(); ++i) {
    const FamilySpec& f = families[i];
    const std::string tag = "family " + std::to_string(i + 1);
    cert.indices.push_back(f.index);
    bool match = f.index.size() == f.chain.size();
    for (std::size_t j = 0; match && j < f.chain.size(); ++j) match = unit_equal(f.index[j], f.chain[j].alpha_order);
    record(tag + ": index " + format_sequence(f.index) + " matches the curve orders of its chain", match, cite::kOrderMatch);
    std::vector<std::string> seen;
    for (const auto& op : f.chain) {
      if (std::find(seen.begin(), seen.end(), op.name) != seen.end()) continue;
      seen.push_back(op.name);
      const RobustnessReport r = is_robust(op);
      record(tag + ": " + robust_line(op, r), r.status == RobustnessReport::Status::Robust, cite::kRobust);
    }
    if (f.bases.empty()) record(tag + ": has at least one base knot", false, cite::kArf);
    for (const auto& b : f.bases) {
      const int a = arf(b);
      record(tag + ": base " + b.name() + " has Arf invariant 0", a == 0, cite::kArf);
      if (a == 0) cert.members.push_back({compose(f.chain, base_expression(b)), i});
    }
  }
  const std::size_t m = families.size();
  cert.pairwise.assign(m, std::vector<std::optional<TupleVerdict>>(m));
  bool isogenous_pair = false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (cert.indices[i].size() != cert.indices[j].size()) {
        record("indices of families " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " have equal length", false,
               cite::kPairwise);
        continue;
      }
      TupleVerdict tv = tuple_strongly_coprime(cert.indices[i], cert.indices[j], bound);
      isogenous_pair = isogenous_pair || !tv.strongly_coprime;
      record("indices of families " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are strongly coprime: " +
                 describe_tuple(tv),
             tv.strongly_coprime, cite::kPairwise);
      cert.pairwise[i][j] = tv;
      cert.pairwise[j][i] = std::move(tv);
    }
  bool refuted_rho0 = false;
  for (std::size_t i = 0; i < m && !refuted_rho0; ++i) {
    const auto fos = fos_values(families[i].chain.back());
    for (const auto& b : families[i].bases) {
      std::optional<RelationResult> rel;
      TrailEntry e = rho0_guard(b, fos, precision, &rel);
      e.hypothesis = "family " + std::to_string(i + 1) + ": " + e.hypothesis;
      record(e.hypothesis, e.outcome, cite::kRho0Numeric);
      if (rel && rel->found) {
        refuted_rho0 = true;
        cert.relation = rel->coefficients;
        break;
      }
    }
  }
  if (refuted_rho0) {
    cert.rho0_status = FamilyCertificate::Rho0Status::RefutedRelation;
  } else if (rho0_provenance.empty()) {
    cert.rho0_status = FamilyCertificate::Rho0Status::Inconclusive;
    record("rho0 span hypothesis not asserted", false, cite::kRho0Asserted);
  } else {
    cert.rho0_status = FamilyCertificate::Rho0Status::AssertedIndependent;
    record("rho0 span hypothesis asserted: " + rho0_provenance, true, cite::kRho0Asserted);
  }
  if (isogenous_pair || refuted_rho0)
    cert.conclusion = FamilyCertificate::Conclusion::Refuted;
  else if (all_checks && !families.empty())
    cert.conclusion = FamilyCertificate::Conclusion::IndependentCertified;
  else
    cert.conclusion = FamilyCertificate::Conclusion::Conditional;
  return cert;
}

std::string to_string(InjectivityReport::Status s) {
  switch (s) {
    case InjectivityReport::Status::DisjointImagesOnSubgroup:
      return "disjoint-images-on-subgroup";
    case InjectivityReport::Status::SamePolynomial:
      return "same-polynomial";
    case InjectivityReport::Status::Inconclusive:
      return "inconclusive";
  }
  return "";
}

InjectivityReport injectivity_report(const DoublingOperator& a, const DoublingOperator& b) {
  InjectivityReport r;
  bool robust = true;
  for (const DoublingOperator* op : {&a, &b}) {
    const RobustnessReport rr = is_robust(*op);
    const bool ok = rr.status == RobustnessReport::Status::Robust;
    robust = robust && ok;
    r.trail.push_back({robust_line(*op, rr), ok, cite::kRobust});
  }
  if (!robust) return r;
  const LaurentPoly da = alexander_poly(a.pattern), db = alexander_poly(b.pattern);
  if (unit_equal(da, db)) {
    r.trail.push_back({"Alexander polynomials agree: " + da.to_string(), true, cite::kInjectivity});
    r.status = InjectivityReport::Status::SamePolynomial;
    return r;
  }
  const bool cp = coprime(da, db);
  r.trail.push_back({"gcd(" + da.to_string() + ", " + db.to_string() + ") = 1", cp, cite::kInjectivity});
  if (cp) {
    r.status = InjectivityReport::Status::DisjointImagesOnSubgroup;
    r.scope =
        "images meet only in 0 on the subgroup generated by iterated robust images of Arf-zero knots with independent rho0; "
        "nothing is claimed on the rest of the concordance group";
  }
  return r;
}

FractalTree fractal_tree(std::size_t depth, const std::vector<DoublingOperator>& family, long bound) {
  if (depth == 0) throw DomainError("fractal_tree needs depth >= 1");
  if (family.empty()) throw DomainError("fractal_tree needs a nonempty family");
  FractalTree t;
  t.depth = depth;
  for (const auto& op : family) {
    if (is_robust(op).status != RobustnessReport::Status::Robust)
      throw DomainError("fractal_tree needs robust operators; " + op.name + " is not");
    t.names.push_back(op.name);
  }
  std::vector<std::size_t> idx(depth, 0);
  while (true) {
    FractalPath p;
    p.ops = idx;
    for (std::size_t i : idx) p.tuple.push_back(family[i].alpha_order);
    t.paths.push_back(std::move(p));
    std::size_t pos = depth;
    while (pos > 0 && ++idx[pos - 1] == family.size()) idx[--pos] = 0;
    if (pos == 0) break;
  }
  std::map<std::pair<std::string, std::string>, bool> memo;
  for (std::size_t i = 0; i < t.paths.size(); ++i)
    for (std::size_t j = i + 1; j < t.paths.size(); ++j) {
      auto key = std::make_pair(format_sequence(t.paths[i].tuple), format_sequence(t.paths[j].tuple));
      auto it = memo.find(key);
      if (it == memo.end()) it = memo.emplace(key, tuple_strongly_coprime(t.paths[i].tuple, t.paths[j].tuple, bound).strongly_coprime).first;
      if (!it->second) {
        t.paths[i].coprime_to_others = t.paths[j].coprime_to_others = false;
        t.pairwise_strongly_coprime = false;
      }
    }
  return t;
}

std::string fractal_tree_dot(const FractalTree& t) {
  std::ostringstream os;
  os << "digraph fractal {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n  n [label=\"K0\"];\n";
  // nodes are named by the innermost-first prefix of operator indices
  std::vector<std::string> emitted;
  for (const auto& p : t.paths) {
    std::string id = "n", label;
    for (std::size_t level = 0; level < t.depth; ++level) {
      const std::size_t op = p.ops[t.depth - 1 - level];
      const std::string parent = id;
      id += "_" + std::to_string(op);
      label = t.names[op] + (label.empty() ? "" : " o " + label);
      if (std::find(emitted.begin(), emitted.end(), id) != emitted.end()) continue;
      emitted.push_back(id);
      std::string text = label;
      if (level + 1 == t.depth) text += "\\n" + format_sequence(p.tuple) + (p.coprime_to_others ? "" : "\\n(isogenous to another path)");
      os << "  " << id << " [label=\"" << text << "\"];\n";
      os << "  " << parent << " -> " << id << " [label=\"" << t.names[op] << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace knotloc
