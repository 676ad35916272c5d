#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "knotloc/error.hpp"
#include "knotloc/json_io.hpp"

namespace knotloc::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Globals {
  long bound = kDefaultIsogenyBound;
  unsigned precision = kDefaultPrecision;
  bool exact = false;
  std::string format = "json";
  std::vector<std::string> workspaces;
};

// What a command produced: a JSON document, optional alternative renderings,
// and whether the answer falls short of exactness.
struct Output {
  Json json;
  std::function<std::string()> text;
  std::function<std::string()> csv;
  std::function<std::string()> svg;
  std::function<std::string()> dot;
  bool inexact = false;
};

void flatten(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array()) {
    if (j.empty()) os << prefix << ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::string render(const Output& o, const std::string& format) {
  auto need = [&](const std::function<std::string()>& f) {
    if (!f) throw UsageError("--format " + format + " is not available for this command");
    return f();
  };
  if (format == "json") return o.json.dump(2) + "\n";
  if (format == "text") {
    if (o.text) return o.text();
    std::ostringstream os;
    flatten(o.json, "", os);
    return os.str();
  }
  if (format == "csv") return need(o.csv);
  if (format == "svg") return need(o.svg);
  return need(o.dot);
}

bool is_file(const std::string& s) {
  std::error_code ec;
  return std::filesystem::is_regular_file(s, ec);
}

// A JSON document given inline, as a file path, or nullopt for a plain name
std::optional<Json> document(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return parse_json(arg);
  if (is_file(arg)) return read_json_file(arg);
  return std::nullopt;
}

struct Args {
  std::string p, q, k1, k2, name, at, m, x, mode = "strong";
  std::string pattern, alpha, cert, infection = "trefoil", base, o1, o2, e, target, assume;
  unsigned standard = 0;
  std::size_t depth = 1;
  std::vector<std::string> ops;
};

class Session {
 public:
  explicit Session(const Globals& g) : g_(g) {
    ws_.config.bound = g.bound;
    ws_.config.precision = g.precision;
    for (const auto& f : g.workspaces) ws_.load(read_json_file(f));
  }

  SeifertMatrix knot(const std::string& arg) {
    if (auto d = document(arg)) return knot_from_json(*d, ws_);
    return ws_.knot(arg);
  }

  DoublingOperator op(const std::string& arg) {
    if (auto d = document(arg)) return operator_from_json(*d, ws_);
    return ws_.op(arg);
  }

  KnotExpression expr(const std::string& arg) {
    if (auto d = document(arg)) return load_expression(*d, ws_);
    return ws_.expression(arg);
  }

  // A knot (by file or name) gives its Alexander module; anything else is read as the order.
  CyclicModule module(const std::string& arg, std::optional<SeifertMatrix>* source = nullptr) {
    if (document(arg) || ws_.has_knot(arg)) {
      SeifertMatrix V = knot(arg);
      if (source) *source = V;
      return module_from_knot(V);
    }
    return make_module(parse_poly(arg));
  }

  long bound() const { return g_.bound; }
  unsigned precision() const { return g_.precision; }

 private:
  Globals g_;
  Workspace ws_;
};

std::string line(const std::string& s) { return s + "\n"; }

// ---- poly

void add_poly(CLI::App& app, Args& A, std::function<Output(Session&)>& action) {
  auto* poly = app.add_subcommand("poly", "Laurent polynomials over Q");
  poly->require_subcommand(1);

  auto two = [&](CLI::App* sub) {
    sub->add_option("p", A.p, "polynomial in t")->required();
    sub->add_option("q", A.q, "polynomial in t")->required();
  };

  auto* parse = poly->add_subcommand("parse", "parse and normalize a polynomial");
  parse->add_option("p", A.p, "polynomial in t")->required();
  parse->callback([&] {
    action = [&A](Session&) {
      const LaurentPoly p = parse_poly(A.p);
      Output o;
      o.json = {{"polynomial", p.to_string()},
                {"normalized", normalize(p).to_string()},
                {"low_degree", p.is_zero() ? Json(nullptr) : Json(p.low_degree())},
                {"high_degree", p.is_zero() ? Json(nullptr) : Json(p.high_degree())},
                {"augmentation", to_string(augmentation(p))}};
      o.text = [p] { return line(p.to_string()); };
      return o;
    };
  });

  auto* fac = poly->add_subcommand("factor", "factor over Q");
  fac->add_option("p", A.p, "polynomial in t")->required();
  fac->callback([&] {
    action = [&A](Session&) {
      const LaurentPoly p = parse_poly(A.p);
      if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
      const Factorization f = factor(p);
      Output o;
      o.json = to_json(f);
      o.json["polynomial"] = p.to_string();
      o.text = [f] {
        std::string s = to_string(f.unit);
        if (f.shift != 0) s += " * t^" + std::to_string(f.shift);
        for (const auto& [g, m] : f.factors) s += " * (" + g.to_string() + ")" + (m > 1 ? "^" + std::to_string(m) : "");
        return line(s);
      };
      return o;
    };
  });

  auto* g = poly->add_subcommand("gcd", "normalized gcd");
  two(g);
  g->callback([&] {
    action = [&A](Session&) {
      const LaurentPoly d = gcd(parse_poly(A.p), parse_poly(A.q));
      Output o;
      o.json = {{"gcd", d.to_string()}};
      o.text = [d] { return line(d.to_string()); };
      return o;
    };
  });

  auto* res = poly->add_subcommand("resultant", "resultant of the ordinary representatives");
  two(res);
  res->callback([&] {
    action = [&A](Session&) {
      const Rational r = resultant(parse_poly(A.p), parse_poly(A.q));
      Output o;
      o.json = {{"resultant", to_string(r)}};
      o.text = [r] { return line(to_string(r)); };
      return o;
    };
  });

  auto* iso = poly->add_subcommand("isogeny", "strong coprimality of p and q");
  two(iso);
  iso->callback([&] {
    action = [&A](Session& s) {
      const IsogenyVerdict v = strongly_coprime(parse_poly(A.p), parse_poly(A.q), s.bound());
      Output o;
      o.json = to_json(v);
      o.inexact = !v.exact;
      return o;
    };
  });

  auto* tup = poly->add_subcommand("tuple", "positional strong coprimality of two sequences");
  tup->add_option("P", A.p, "sequence \"p:..;p:..\", outermost first")->required();
  tup->add_option("Q", A.q, "sequence \"p:..;p:..\", outermost first")->required();
  tup->callback([&] {
    action = [&A](Session& s) {
      const TupleVerdict v = tuple_strongly_coprime(parse_sequence(A.p), parse_sequence(A.q), s.bound());
      Output o;
      o.json = to_json(v);
      o.inexact = !v.exact;
      return o;
    };
  });
}

// ---- knot

void add_knot(CLI::App& app, Args& A, std::function<Output(Session&)>& action) {
  auto* knot = app.add_subcommand("knot", "Seifert-matrix invariants; KNOT is a builtin name, a JSON file or inline JSON");
  knot->require_subcommand(1);

  auto* alex = knot->add_subcommand("alex", "Alexander polynomial");
  alex->add_option("knot", A.k1)->required();
  alex->callback([&] {
    action = [&A](Session& s) {
      const SeifertMatrix V = s.knot(A.k1);
      const LaurentPoly d = alexander_poly(V);
      Output o;
      o.json = {{"name", V.name()}, {"alexander", d.to_string()}};
      o.text = [d] { return line(d.to_string()); };
      return o;
    };
  });

  auto* sig = knot->add_subcommand("signature", "Levine-Tristram signature function");
  sig->add_option("knot", A.k1)->required();
  sig->add_option("--at", A.at, "evaluate at theta = r*pi for a rational 0 < r < 1");
  sig->callback([&] {
    action = [&A](Session& s) {
      const SeifertMatrix V = s.knot(A.k1);
      Output o;
      if (!A.at.empty()) {
        const Rational r = parse_real(A.at);
        const int v = signature_at(V, r);
        o.json = {{"name", V.name()}, {"theta_over_pi", to_string(r)}, {"signature", v}};
        o.text = [v] { return line(std::to_string(v)); };
        return o;
      }
      const SignatureProfile p = signature_profile(V);
      const unsigned digits = s.precision();
      o.json = to_json(p, digits);
      o.json["name"] = V.name();
      o.csv = [p, digits] { return profile_csv(p, digits); };
      o.svg = [p, V] { return profile_svg(p, "signature of " + V.name()); };
      return o;
    };
  });

  auto* r0 = knot->add_subcommand("rho0", "average of the signature function");
  r0->add_option("knot", A.k1)->required();
  r0->callback([&] {
    action = [&A](Session& s) {
      const SeifertMatrix V = s.knot(A.k1);
      const Rho0Value r = rho0(V, s.precision());
      const std::string csv = profile_csv(r.profile, s.precision());
      Output o;
      o.json = to_json(r);
      o.json["name"] = V.name();
      o.json["profile_csv"] = csv;
      o.text = [r, csv, V] { return "rho0(" + V.name() + ") = " + r.numeric + "\n" + csv; };
      o.csv = [csv] { return csv; };
      o.svg = [r, V] { return profile_svg(r.profile, "signature of " + V.name()); };
      return o;
    };
  });

  auto* a = knot->add_subcommand("arf", "Arf invariant");
  a->add_option("knot", A.k1)->required();
  a->callback([&] {
    action = [&A](Session& s) {
      const SeifertMatrix V = s.knot(A.k1);
      const int v = arf(V);
      Output o;
      o.json = {{"name", V.name()}, {"arf", v}};
      o.text = [v] { return line(std::to_string(v)); };
      return o;
    };
  });

  auto* sum = knot->add_subcommand("sum", "connected sum, as knot JSON");
  sum->add_option("a", A.k1)->required();
  sum->add_option("b", A.k2)->required();
  sum->add_option("--name", A.name, "name of the result");
  sum->callback([&] {
    action = [&A](Session& s) {
      SeifertMatrix V = connected_sum(s.knot(A.k1), s.knot(A.k2));
      if (!A.name.empty()) V.set_name(A.name);
      Output o;
      o.json = knot_to_json(V);
      return o;
    };
  });

  auto* mir = knot->add_subcommand("mirror", "mirror image, as knot JSON");
  mir->add_option("knot", A.k1)->required();
  mir->add_option("--name", A.name, "name of the result");
  mir->callback([&] {
    action = [&A](Session& s) {
      SeifertMatrix V = mirror(s.knot(A.k1));
      if (!A.name.empty()) V.set_name(A.name);
      Output o;
      o.json = knot_to_json(V);
      return o;
    };
  });
}

// ---- module

void add_module(CLI::App& app, Args& A, std::function<Output(Session&)>& action) {
  auto* mod = app.add_subcommand("module", "cyclic Alexander modules; MODULE is a knot or an order polynomial");
  mod->require_subcommand(1);

  auto* subs = mod->add_subcommand("submodules", "submodule lattice");
  subs->add_option("module", A.m)->required();
  subs->callback([&] {
    action = [&A](Session& s) {
      const CyclicModule M = s.module(A.m);
      Json list = Json::array();
      for (const auto& sm : proper_submodules(M)) list.push_back(to_json(sm));
      Output o;
      o.json = {{"order", M.order.to_string()}, {"cyclic", M.cyclic}, {"submodules", list}};
      return o;
    };
  });

  auto* iso = mod->add_subcommand("isotropy", "Blanchfield isotropy of each submodule");
  iso->add_option("module", A.m)->required();
  iso->callback([&] {
    action = [&A](Session& s) {
      std::optional<SeifertMatrix> V;
      const CyclicModule M = s.module(A.m, &V);
      std::optional<BlanchfieldPairing> B;
      if (V && M.cyclic) B.emplace(*V);
      Json list = Json::array();
      for (const auto& sm : proper_submodules(M)) {
        Json e = to_json(sm);
        if (B) {
          e["isotropic"] = isotropic(sm, *B);
        } else {
          const auto p = isotropic_by_pattern(sm, M);
          e["isotropic"] = p ? Json(*p) : Json(nullptr);
        }
        list.push_back(e);
      }
      Output o;
      o.json = {{"order", M.order.to_string()},
                {"source", B ? "blanchfield pairing of the Seifert matrix" : "delta*delta' pattern of the order"},
                {"submodules", list}};
      o.inexact = !B;
      return o;
    };
  });

  auto* ord = mod->add_subcommand("order", "annihilator of the class of x");
  ord->add_option("module", A.m)->required();
  ord->add_option("x", A.x, "coset representative")->required();
  ord->callback([&] {
    action = [&A](Session& s) {
      const LaurentPoly r = element_order(s.module(A.m), parse_poly(A.x));
      Output o;
      o.json = {{"order", r.to_string()}};
      o.text = [r] { return line(r.to_string()); };
      return o;
    };
  });

  auto* loc = mod->add_subcommand("localize", "localization at p(t)");
  loc->add_option("module", A.m)->required();
  loc->add_option("p", A.x, "localizing polynomial")->required();
  loc->add_option("--mode", A.mode, "classical or strong")->check(CLI::IsMember({"classical", "strong"}));
  loc->callback([&] {
    action = [&A](Session& s) {
      const auto md = A.mode == "classical" ? LocalizationVerdict::Mode::ClassicalCoprime : LocalizationVerdict::Mode::StrongCoprime;
      const LocalizationVerdict v = localize(s.module(A.m), parse_poly(A.x), md, s.bound());
      Output o;
      o.json = to_json(v);
      o.inexact = !v.exact;
      return o;
    };
  });
}

// ---- op

void add_op(CLI::App& app, Args& A, std::function<Output(Session&)>& action) {
  auto* op = app.add_subcommand("op", "doubling operators; OP is Rp<k>, Rp<k>_<knot>, a JSON file or inline JSON");
  op->require_subcommand(1);

  auto* make = op->add_subcommand("make", "validate operator data and emit operator JSON");
  make->add_option("--name", A.name, "operator name");
  make->add_option("--pattern", A.pattern, "pattern knot");
  make->add_option("--alpha-order", A.alpha, "order of the infection curve");
  make->add_option("--cert", A.cert, "robustness certificate: the \"robust\" object of operator JSON");
  make->add_option("--standard", A.standard, "the standard robust operator on p_k")->check(CLI::PositiveNumber);
  make->add_option("--infection", A.infection, "infecting knot for --standard");
  make->callback([&] {
    action = [&A](Session& s) {
      DoublingOperator d;
      if (A.standard > 0) {
        if (!A.pattern.empty() || !A.alpha.empty() || !A.cert.empty()) throw UsageError("--standard excludes --pattern, --alpha-order and --cert");
        d = standard_robust_operator(A.standard, s.knot(A.infection));
        if (!A.name.empty()) d.name = A.name;
      } else {
        if (A.name.empty() || A.pattern.empty() || A.alpha.empty()) throw UsageError("op make needs --name, --pattern and --alpha-order, or --standard");
        Json j{{"name", A.name}, {"alpha_order", A.alpha}};
        const SeifertMatrix V = s.knot(A.pattern);
        j["pattern_name"] = V.name();
        j["pattern_seifert"] = knot_to_json(V)["seifert"];
        if (!A.cert.empty()) {
          auto c = document(A.cert);
          if (!c) throw InputError("--cert must be a JSON file or inline JSON");
          j["robust"] = *c;
        }
        d = operator_from_json(j, Workspace{});
      }
      Output o;
      o.json = operator_to_json(d);
      return o;
    };
  });

  auto* chk = op->add_subcommand("check-robust", "robustness checks");
  chk->add_option("op", A.o1)->required();
  chk->callback([&] {
    action = [&A](Session& s) {
      const DoublingOperator d = s.op(A.o1);
      const RobustnessReport r = is_robust(d);
      Output o;
      o.json = to_json(r);
      o.json["name"] = d.name;
      o.json["generates"] = d.generates;
      return o;
    };
  });

  auto* comp = op->add_subcommand("compose", "compose operators, outermost first, onto a base knot");
  comp->add_option("ops", A.ops, "operators, outermost first")->required();
  comp->add_option("--base", A.base, "base knot")->required();
  comp->callback([&] {
    action = [&A](Session& s) {
      std::vector<DoublingOperator> chain;
      for (const auto& a : A.ops) chain.push_back(s.op(a));
      Output o;
      o.json = expression_bundle(compose(chain, base_expression(s.knot(A.base))));
      return o;
    };
  });

  auto* ord = op->add_subcommand("orders", "order sequences of an expression, outermost first");
  ord->add_option("expr", A.o1)->required();
  ord->callback([&] {
    action = [&A](Session& s) {
      Json seqs = Json::array();
      std::string text;
      for (const auto& q : order_sequences(s.expr(A.o1))) {
        seqs.push_back(format_sequence(q));
        text += format_sequence(q) + "\n";
      }
      Output o;
      o.json = {{"sequences", seqs}};
      o.text = [text] { return text; };
      return o;
    };
  });
}

// ---- obstruct

void add_obstruct(CLI::App& app, Args& A, std::function<Output(Session&)>& action) {
  auto* ob = app.add_subcommand("obstruct", "filtration verdicts");
  ob->require_subcommand(1);

  auto* van = ob->add_subcommand("vanish", "does the expression vanish in the filtration localized at P");
  van->add_option("expr", A.e)->required();
  van->add_option("--target", A.target, "P as \"p:..;p:..\", outermost first")->required();
  van->callback([&] {
    action = [&A](Session& s) {
      const ObstructionVerdict v = vanishing_verdict(s.expr(A.e), parse_sequence(A.target), s.bound());
      Output o;
      o.json = to_json(v);
      o.inexact = !v.exact || v.status == ObstructionVerdict::Status::Inconclusive;
      return o;
    };
  });

  auto* sur = ob->add_subcommand("survive", "is the expression nonzero in the filtration localized at P");
  sur->add_option("expr", A.e)->required();
  sur->add_option("--target", A.target, "P as \"p:..;p:..\", outermost first")->required();
  sur->add_option("--assume", A.assume, "provenance for the rho0 span hypothesis; without it the verdict stays inconclusive");
  sur->callback([&] {
    action = [&A](Session& s) {
      const ObstructionVerdict v = survival_verdict(s.expr(A.e), parse_sequence(A.target), Rho0Hypothesis{A.assume}, s.precision());
      Output o;
      o.json = to_json(v);
      o.inexact = !v.exact || v.status == ObstructionVerdict::Status::Inconclusive;
      return o;
    };
  });

  auto* fam = ob->add_subcommand("family", "independence certificate for families of iterated operators");
  fam->add_option("file", A.o1, "families JSON")->required();
  auto* fam_assume = fam->add_option("--assume", A.assume, "provenance for the rho0 span hypothesis (overrides the file)");
  fam->callback([&A, &action, fam_assume] {
    action = [&A, fam_assume](Session& s) {
      auto doc = document(A.o1);
      if (!doc) throw InputError("obstruct family needs a JSON file or inline JSON");
      Workspace ws;
      ws.config = {s.bound(), s.precision()};
      if (doc->contains("knots") || doc->contains("operators")) ws.load(*doc);
      const std::string prov = fam_assume->count() > 0 ? A.assume : doc->value("provenance", "");
      const FamilyCertificate c = family_certificate(families_from_json(*doc, ws), prov, s.bound(), s.precision());
      Output o;
      o.json = to_json(c);
      o.inexact = c.conclusion == FamilyCertificate::Conclusion::Conditional;
      return o;
    };
  });

  auto* inj = ob->add_subcommand("inject", "disjointness of the images of two robust operators");
  inj->add_option("a", A.o1)->required();
  inj->add_option("b", A.o2)->required();
  inj->callback([&] {
    action = [&A](Session& s) {
      const InjectivityReport r = injectivity_report(s.op(A.o1), s.op(A.o2));
      Output o;
      o.json = to_json(r);
      o.inexact = r.status == InjectivityReport::Status::Inconclusive;
      return o;
    };
  });

  auto* tree = ob->add_subcommand("tree", "all depth-n compositions of a family with their order tuples");
  tree->add_option("ops", A.ops, "family of robust operators")->required();
  tree->add_option("--depth", A.depth, "composition depth")->check(CLI::Range(std::size_t{1}, std::size_t{8}));
  tree->callback([&] {
    action = [&A](Session& s) {
      std::vector<DoublingOperator> fam;
      for (const auto& a : A.ops) fam.push_back(s.op(a));
      const FractalTree t = fractal_tree(A.depth, fam, s.bound());
      Output o;
      o.json = to_json(t);
      o.dot = [t] { return fractal_tree_dot(t); };
      return o;
    };
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants and filtration verdicts for knots built by doubling operators", "knotloc"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--bound", g.bound, "exponent bound for the resultant sweep")->check(CLI::PositiveNumber);
  app.add_option("--precision", g.precision, "decimal digits for rho0 and profiles")->check(CLI::Range(1u, 2000u));
  app.add_flag("--exact", g.exact, "exit 3 when the answer is inconclusive or bound-qualified");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text", "csv", "dot", "svg"}));
  app.add_option("--workspace", g.workspaces, "JSON file with knots, operators and expressions to load");

  Args A;
  std::function<Output(Session&)> action;
  add_poly(app, A, action);
  add_knot(app, A, action);
  add_module(app, A, action);
  add_op(app, A, action);
  add_obstruct(app, A, action);
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* leaf : sub->get_subcommands({})) leaf->fallthrough();
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::RequiredError& e) {
    // name the level that is missing its subcommand and what it accepts
    CLI::App* level = &app;
    while (!level->get_subcommands().empty()) level = level->get_subcommands().front();
    if (level->get_subcommands({}).empty()) return app.exit(e, out, err) == 0 ? kOk : kUsage;
    std::string names;
    for (const auto* sub : level->get_subcommands({})) names += (names.empty() ? "" : ", ") + sub->get_name();
    const auto extra = level->remaining();
    err << (extra.empty() ? "missing subcommand" : "unknown subcommand \"" + extra.front() + "\"");
    err << (level == &app ? "" : " for " + level->get_name()) << "; expected one of: " << names << "\n";
    return kUsage;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  if (!action) {
    err << app.help();
    return kUsage;
  }
  try {
    Session session(g);
    const Output o = action(session);
    out << render(o, g.format);
    return g.exact && o.inexact ? kInexact : kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "rejected: " << e.what() << "\n";
    return kRejected;
  }
}

}  // namespace knotloc::cli
