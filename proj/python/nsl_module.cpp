#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nsl/cli.hpp"
#include "nsl/image.hpp"
#include "nsl/nlogic.hpp"
#include "nsl/parse.hpp"
#include "nsl/refute.hpp"

namespace py = pybind11;

using nsl::nlogic::NValue;
using nsl::nlogic::Semantics;
using nsl::nsets::NSet;
using nsl::ordfield::RationalFunction;

namespace {

Semantics semantics_arg(const std::string& name) {
  const auto s = nsl::nlogic::parse_semantics(name);
  if (!s) throw py::value_error("unknown semantics '" + name + "' (corrected, original, clamped)");
  return *s;
}

py::object fraction(const nsl::ordfield::Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(q.to_string());
}

nsl::nlogic::Environment environment_arg(const py::dict& bindings) {
  nsl::nlogic::Environment env;
  for (const auto& [key, value] : bindings) {
    const auto name = key.cast<std::string>();
    if (py::isinstance<py::str>(value)) {
      env.bindings.emplace(name, nsl::cli::parse_nvalue(value.cast<std::string>()));
    } else {
      env.bindings.emplace(name, value.cast<NValue>());
    }
  }
  return env;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact neutrosophic logic over the nonarchimedean field Q(X)";

  py::register_exception<nsl::cli::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const nsl::nlogic::UnboundAtom& e) {
      PyErr_SetString(PyExc_KeyError, e.what());
    }
  });

  py::class_<RationalFunction>(m, "Element", "Element of Q(X); X is a positive infinite element")
      .def(py::init(&nsl::cli::parse_field_elem), py::arg("text"))
      .def(py::init<long>(), py::arg("value"))
      .def_static("x", &RationalFunction::x)
      .def_static("inv_x_pow", [](int n) { return RationalFunction::inv_x_pow(n); }, py::arg("n"),
                  "1/X^n")
      .def_property_readonly("sign", &RationalFunction::sign)
      .def_property_readonly("valuation", &RationalFunction::valuation)
      .def_property_readonly("is_infinitesimal", [](const RationalFunction& r) { return nsl::ordfield::is_infinitesimal(r); })
      .def_property_readonly("is_finite", [](const RationalFunction& r) { return nsl::ordfield::is_finite(r); })
      .def("standard_part",
           [](const RationalFunction& r) -> py::object {
             const auto st = nsl::ordfield::try_standard_part(r);
             if (!st) throw py::value_error("standard part of an infinite element");
             return fraction(*st);
           })
      .def("infinitely_close", [](const RationalFunction& a, const RationalFunction& b) {
        return nsl::ordfield::infinitely_close(a, b);
      })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__hash__", [](const RationalFunction& r) { return py::hash(py::str(r.to_string())); })
      .def("__str__", &RationalFunction::to_string)
      .def("__repr__", [](const RationalFunction& r) { return "Element('" + r.to_string() + "')"; });
  py::implicitly_convertible<py::str, RationalFunction>();
  py::implicitly_convertible<py::int_, RationalFunction>();

  py::class_<NSet>(m, "NSet", "Finite union of generalized intervals")
      .def(py::init([](const std::string& text) { return nsl::cli::parse_nset(text); }), py::arg("text"))
      .def("contains", &NSet::contains, py::arg("x"))
      .def("__contains__", &NSet::contains)
      .def_property_readonly("empty", &NSet::empty)
      .def("__len__", [](const NSet& s) { return s.intervals().size(); }, "number of intervals")
      .def("is_subset", [](const NSet& a, const NSet& b) { return nsl::nsets::is_subset(a, b); })
      .def("probe_points", [](const NSet& s) { return nsl::nsets::probe_points(s); })
      .def("__or__", [](const NSet& a, const NSet& b) { return nsl::nsets::unite(a, b); })
      .def("__and__", [](const NSet& a, const NSet& b) { return nsl::nsets::intersect(a, b); })
      .def(py::self == py::self)
      .def("__str__", [](const NSet& s) { return nsl::nsets::to_string(s); })
      .def("__repr__", [](const NSet& s) { return "NSet('" + nsl::nsets::to_string(s) + "')"; });
  py::implicitly_convertible<py::str, NSet>();

  m.def("unit_interval", &nsl::nsets::unit_interval);
  m.def("unit_interval_def1", &nsl::nsets::unit_interval_def1, py::arg("eps"));
  m.def("monad", &nsl::nsets::monad, py::arg("a"));
  m.def("left_monad", &nsl::nsets::left_monad, py::arg("a"));
  m.def("right_monad", &nsl::nsets::right_monad, py::arg("b"));
  m.def("singleton", &nsl::nsets::singleton, py::arg("v"));
  m.def("finite_set", &nsl::nsets::finite_set, py::arg("members"));
  m.def("owedge", &nsl::nsets::owedge);
  m.def("ovee", &nsl::nsets::ovee);
  m.def("obslash", &nsl::nsets::obslash);
  m.def("ovee_prime", &nsl::nsets::ovee_prime);
  m.def("obslash_prime", &nsl::nsets::obslash_prime);
  m.def("elem_add", &nsl::nsets::elem_add);
  m.def("elem_sub", &nsl::nsets::elem_sub);
  m.def("elem_mul", &nsl::nsets::elem_mul);
  m.def("clamp_to_unit", &nsl::nsets::clamp_to_unit);

  m.def(
      "refute",
      [](const RationalFunction& center, const RationalFunction& candidate, const std::string& mode,
         const RationalFunction& eps) {
        if (mode != "inf" && mode != "sup") throw py::value_error("mode must be 'inf' or 'sup'");
        const auto which = mode == "inf" ? nsl::nsets::Extremum::Infimum : nsl::nsets::Extremum::Supremum;
        const NSet s = nsl::nsets::monad(center);
        const auto r = nsl::nsets::refute(which, s, candidate, eps);
        const bool witness = std::holds_alternative<nsl::nsets::Witness>(r);
        const RationalFunction value =
            witness ? std::get<nsl::nsets::Witness>(r).point : std::get<nsl::nsets::BetterBound>(r).bound;
        return py::make_tuple(witness ? "witness" : "better_bound", value, nsl::nsets::verify(which, s, candidate, r));
      },
      py::arg("center"), py::arg("candidate"), py::arg("mode"), py::arg("eps") = RationalFunction::inv_x_pow(1),
      "Certificate that `candidate` is not the infimum/supremum of mon(center): (kind, element, verified)");

  py::class_<NValue>(m, "NValue", "Neutrosophic value (T, I, F)")
      .def(py::init([](const std::string& text) { return nsl::cli::parse_nvalue(text); }), py::arg("text"))
      .def(py::init([](NSet t, NSet i, NSet f) { return NValue{std::move(t), std::move(i), std::move(f)}; }),
           py::arg("truth"), py::arg("indeterminacy"), py::arg("falsity"))
      .def_readonly("truth", &NValue::truth)
      .def_readonly("indeterminacy", &NValue::indeterminacy)
      .def_readonly("falsity", &NValue::falsity)
      .def_property_readonly("within_unit", [](const NValue& v) { return nsl::nlogic::within_unit(v); })
      .def(py::self == py::self)
      .def("__str__", [](const NValue& v) { return nsl::nlogic::to_string(v); })
      .def("__repr__", [](const NValue& v) { return "NValue('" + nsl::nlogic::to_string(v) + "')"; });

  m.def(
      "eval",
      [](const std::string& formula, const py::dict& env, const std::string& semantics) {
        return nsl::nlogic::eval(nsl::cli::parse_formula(formula), environment_arg(env), semantics_arg(semantics));
      },
      py::arg("formula"), py::arg("env"), py::arg("semantics") = "corrected",
      "Evaluate a formula; env maps atom names to NValue or '(T, I, F)' text");

  m.def(
      "format_formula", [](const std::string& text) { return nsl::nlogic::to_string(nsl::cli::parse_formula(text)); },
      py::arg("text"), "Canonical text of a formula");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"nsl"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out;
        std::ostringstream err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = nsl::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process: (exit code, stdout, stderr)");
}
