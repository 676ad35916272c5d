#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotloc/error.hpp"
#include "knotloc/json_io.hpp"

namespace py = pybind11;
using namespace knotloc;

namespace {

// A name, or inline JSON when the text starts with '{' or '['.
Json reference(const std::string& text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) return parse_json(text);
  return Json(text);
}

std::string dump(const Json& j) { return j.dump(); }

LocalizationVerdict::Mode mode_from(const std::string& m) {
  if (m == "classical") return LocalizationVerdict::Mode::ClassicalCoprime;
  if (m == "strong") return LocalizationVerdict::Mode::StrongCoprime;
  throw InputError("unknown localization mode '" + m + "' (expected classical or strong)");
}

class Session {
 public:
  Session(long bound, unsigned precision) { ws_.config = {bound, precision}; }

  void load(const std::string& doc) { ws_.load(parse_json(doc)); }
  std::string workspace() const { return dump(ws_.to_json()); }

  SeifertMatrix knot(const std::string& ref) const { return knot_from_json(reference(ref), ws_); }
  DoublingOperator op(const std::string& ref) const { return operator_from_json(reference(ref), ws_); }
  KnotExpression expr(const std::string& doc) { return load_expression(parse_json(doc), ws_); }

  std::string add_knot(const std::string& ref) {
    const SeifertMatrix V = knot(ref);
    ws_.add_knot(V);
    return dump(knot_to_json(V));
  }
  std::string add_operator(const std::string& ref) {
    const DoublingOperator d = op(ref);
    ws_.add_operator(d);
    return dump(operator_to_json(d));
  }

  long bound() const { return ws_.config.bound; }
  unsigned precision() const { return ws_.config.precision; }

 private:
  Workspace ws_;
};

}  // namespace

PYBIND11_MODULE(_knotloc, m) {
  m.doc() = "Exact Laurent polynomial, Seifert matrix and localization tools; structured results are JSON text";

  static py::exception<Error> base(m, "KnotlocError");
  static py::exception<InputError> input(m, "InputError", base.ptr());
  static py::exception<ParseError> parse(m, "ParseError", base.ptr());
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse(e.what());
    } catch (const InputError& e) {
      input(e.what());
    } catch (const DomainError& e) {
      domain(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  m.def("parse_poly", [](const std::string& s) { return parse_poly(s).to_string(); });
  m.def("normalize", [](const std::string& s) { return normalize(parse_poly(s)).to_string(); });
  m.def("factor", [](const std::string& s) { return dump(to_json(factor(parse_poly(s)))); });
  m.def("gcd", [](const std::string& a, const std::string& b) { return gcd(parse_poly(a), parse_poly(b)).to_string(); });
  m.def("resultant", [](const std::string& a, const std::string& b) { return to_string(resultant(parse_poly(a), parse_poly(b))); });
  m.def("strongly_coprime",
        [](const std::string& a, const std::string& b, long bound) { return dump(to_json(strongly_coprime(parse_poly(a), parse_poly(b), bound))); },
        py::arg("p"), py::arg("q"), py::arg("bound") = kDefaultIsogenyBound);
  m.def("tuple_strongly_coprime",
        [](const std::string& a, const std::string& b, long bound) {
          return dump(to_json(tuple_strongly_coprime(parse_sequence(a), parse_sequence(b), bound)));
        },
        py::arg("P"), py::arg("Q"), py::arg("bound") = kDefaultIsogenyBound);
  m.def("standard_member", [](unsigned k) { return standard_member(k).to_string(); });

  py::class_<Session>(m, "Session")
      .def(py::init<long, unsigned>(), py::arg("bound") = kDefaultIsogenyBound, py::arg("precision") = kDefaultPrecision)
      .def_property_readonly("bound", &Session::bound)
      .def_property_readonly("precision", &Session::precision)
      .def("load", &Session::load)
      .def("workspace", &Session::workspace)
      .def("add_knot", &Session::add_knot)
      .def("add_operator", &Session::add_operator)
      .def("knot", [](const Session& s, const std::string& r) { return dump(knot_to_json(s.knot(r))); })
      .def("alexander", [](const Session& s, const std::string& r) { return alexander_poly(s.knot(r)).to_string(); })
      .def("signature_profile",
           [](const Session& s, const std::string& r, unsigned digits) { return dump(to_json(signature_profile(s.knot(r)), digits)); },
           py::arg("knot"), py::arg("digits") = 12)
      .def("rho0", [](const Session& s, const std::string& r) { return dump(to_json(rho0(s.knot(r), s.precision()))); })
      .def("arf", [](const Session& s, const std::string& r) { return arf(s.knot(r)); })
      .def("connected_sum",
           [](const Session& s, const std::string& a, const std::string& b, const std::string& name) {
             SeifertMatrix V = connected_sum(s.knot(a), s.knot(b));
             if (!name.empty()) V.set_name(name);
             return dump(knot_to_json(V));
           },
           py::arg("a"), py::arg("b"), py::arg("name") = "")
      .def("mirror",
           [](const Session& s, const std::string& r, const std::string& name) {
             SeifertMatrix V = mirror(s.knot(r));
             if (!name.empty()) V.set_name(name);
             return dump(knot_to_json(V));
           },
           py::arg("knot"), py::arg("name") = "")
      .def("submodules",
           [](const Session&, const std::string& order) {
             Json out = Json::array();
             for (const auto& sub : proper_submodules(make_module(parse_poly(order)))) out.push_back(to_json(sub));
             return dump(out);
           })
      .def("localize",
           [](const Session& s, const std::string& order, const std::string& p, const std::string& mode) {
             return dump(to_json(localize(make_module(parse_poly(order)), parse_poly(p), mode_from(mode), s.bound())));
           },
           py::arg("order"), py::arg("p"), py::arg("mode") = "strong")
      .def("standard_operator",
           [](const Session& s, unsigned k, const std::string& infection) {
             return dump(operator_to_json(standard_robust_operator(k, s.knot(infection))));
           },
           py::arg("k"), py::arg("infection") = "trefoil")
      .def("operator", [](const Session& s, const std::string& r) { return dump(operator_to_json(s.op(r))); })
      .def("is_robust", [](const Session& s, const std::string& r) { return dump(to_json(is_robust(s.op(r)))); })
      .def("compose",
           [](Session& s, const std::vector<std::string>& ops, const std::string& base) {
             std::vector<DoublingOperator> chain;
             for (const auto& o : ops) chain.push_back(s.op(o));
             return dump(expression_bundle(compose(chain, base_expression(s.knot(base)))));
           },
           py::arg("ops"), py::arg("base"))
      .def("order_sequences",
           [](Session& s, const std::string& e) {
             std::vector<std::string> out;
             for (const auto& seq : order_sequences(s.expr(e))) out.push_back(format_sequence(seq));
             return out;
           })
      .def("vanishing",
           [](Session& s, const std::string& e, const std::string& target) {
             return dump(to_json(vanishing_verdict(s.expr(e), parse_sequence(target), s.bound())));
           },
           py::arg("expr"), py::arg("target"))
      .def("survival",
           [](Session& s, const std::string& e, const std::string& target, const std::string& assume) {
             return dump(to_json(survival_verdict(s.expr(e), parse_sequence(target), Rho0Hypothesis{assume}, s.precision())));
           },
           py::arg("expr"), py::arg("target"), py::arg("assume") = "")
      .def("family",
           [](Session& s, const std::string& doc, std::optional<std::string> assume) {
             const Json j = parse_json(doc);
             Workspace ws;
             ws.config = {s.bound(), s.precision()};
             if (j.contains("knots") || j.contains("operators")) ws.load(j);
             const std::string prov = assume ? *assume : j.value("provenance", "");
             return dump(to_json(family_certificate(families_from_json(j, ws), prov, s.bound(), s.precision())));
           },
           py::arg("doc"), py::arg("assume") = py::none())
      .def("injectivity", [](const Session& s, const std::string& a, const std::string& b) { return dump(to_json(injectivity_report(s.op(a), s.op(b)))); })
      .def("tree",
           [](const Session& s, const std::vector<std::string>& ops, std::size_t depth) {
             std::vector<DoublingOperator> family;
             for (const auto& o : ops) family.push_back(s.op(o));
             const FractalTree t = fractal_tree(depth, family, s.bound());
             return dump(Json{{"tree", to_json(t)}, {"dot", fractal_tree_dot(t)}});
           },
           py::arg("ops"), py::arg("depth"));
}
