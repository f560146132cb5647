#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cdscope/errors.hpp"
#include "cdscope/report.hpp"

namespace py = pybind11;
using namespace cdscope;

namespace {

Limits limits_for(int max_order) {
  Limits l;
  l.max_order = max_order;
  return l;
}

py::object json_to_py(const ordered_json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_cdscope, m) {
  m.doc() = "Chermak-Delgado measure and lattice analyzer";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError",
                                            PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_RuntimeError);
  py::register_exception<TheoremViolation>(m, "TheoremViolation",
                                           PyExc_RuntimeError);

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("name", &FiniteGroup::name)
      .def_property_readonly("order", &FiniteGroup::order)
      .def("label", &FiniteGroup::label, py::arg("i"))
      .def("mul", &FiniteGroup::mul, py::arg("a"), py::arg("b"))
      .def("inv", &FiniteGroup::inv, py::arg("a"))
      .def("element_order", &FiniteGroup::element_order, py::arg("x"))
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group " + g.name() + " of order " + std::to_string(g.order()) +
               ">";
      });

  m.def(
      "evaluate",
      [](const std::string& expr, int max_order) {
        return evaluate_text(expr, limits_for(max_order));
      },
      py::arg("expr"), py::arg("max_order") = 2000,
      "Build the group named by an expression such as \"D(8) x C(3)\".");

  m.def(
      "analyze",
      [](const std::string& expr, int max_order) {
        Limits limits = limits_for(max_order);
        Analysis a = analyze_group(evaluate_text(expr, limits), limits);
        return json_to_py(analysis_to_json(a));
      },
      py::arg("expr"), py::arg("max_order") = 2000,
      "Full analysis document (measures, fibers, flags) as a dict.");

  m.def(
      "analyze_json",
      [](const std::string& expr, int max_order) {
        Limits limits = limits_for(max_order);
        Analysis a = analyze_group(evaluate_text(expr, limits), limits);
        return analysis_to_json(a).dump(2);
      },
      py::arg("expr"), py::arg("max_order") = 2000);

  m.def(
      "lattice_dot",
      [](const std::string& expr, const std::string& annotate, int max_order) {
        Limits limits = limits_for(max_order);
        Analysis a = analyze_group(evaluate_text(expr, limits), limits);
        return lattice_to_dot(
            a, annotate == "fiber" ? Annotate::Fiber : Annotate::Measure);
      },
      py::arg("expr"), py::arg("annotate") = "measure",
      py::arg("max_order") = 2000, "Hasse diagram in DOT format.");

  m.def(
      "verify",
      [](const std::string& theorem, py::object exprs, int max_order) {
        Limits limits = limits_for(max_order);
        CorpusSpec spec;
        if (exprs.is_none()) {
          spec = default_corpus();
        } else {
          int line = 0;
          for (auto item : exprs)
            spec.entries.push_back({py::cast<std::string>(item), ++line});
        }
        py::list results;
        for (const auto& entry : spec.entries) {
          GroupExpr e = parse(entry.text);
          Analysis a = analyze_group(evaluate(e, limits), limits);
          TheoremOutcome o = run_theorem(theorem, a, &e, limits);
          py::dict d;
          d["expr"] = entry.text;
          d["pass"] = o.pass;
          d["applicable"] = o.applicable;
          d["detail"] = o.detail;
          results.append(std::move(d));
        }
        return results;
      },
      py::arg("theorem"), py::arg("exprs") = py::none(),
      py::arg("max_order") = 2000,
      "Run one verifier over a list of expressions (default corpus if None).");

  m.def("default_corpus", []() {
    py::list out;
    for (const auto& e : default_corpus().entries) out.append(e.text);
    return out;
  });

  m.def("theorems", []() {
    py::list out;
    for (const auto& id : theorem_ids()) out.append(id);
    return out;
  });
}
