#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "weil/homology.hpp"
#include "weil/io.hpp"
#include "weil/verify.hpp"

namespace py = pybind11;
using namespace weil;

namespace {

// Python-side handle; the engine shares algebras as pointers to const.
struct Algebra {
  AlgebraPtr ptr;
};
using OptAlgebra = std::optional<Algebra>;

AlgebraPtr ptr_of(const OptAlgebra& a) { return a ? a->ptr : AlgebraPtr{}; }
AlgebraPtr algebra_or_real(const OptAlgebra& a) { return a ? a->ptr : WeilAlgebra::real(); }

std::string bracket_text(const PoissonStructure& pi, const std::string& f, const std::string& g,
                         const OptAlgebra& alg) {
  const std::size_t n = pi.nvars();
  const AlgebraPtr a = ptr_of(alg);
  if (!a) return to_string(bracket(pi, parse_poly(f, n), parse_poly(g, n)));
  return to_string(bracket_A(pi, parse_apoly(f, n, a), parse_apoly(g, n, a)));
}

std::string eval_text(const Algebra& alg, const std::string& f, const std::vector<std::string>& at) {
  const AlgebraPtr& a = alg.ptr;
  std::vector<WeilElement> coords;
  for (const auto& c : at) coords.push_back(WeilElement::parse(a, c));
  return eval_A(parse_apoly(f, at.size(), a), APoint(a, coords)).to_string();
}

std::string betti_json(const PoissonStructure& pi, const std::string& complex, unsigned degree,
                       const OptAlgebra& alg, std::size_t pmin, std::optional<std::size_t> pmax,
                       std::optional<std::uint64_t> seed) {
  const ComplexKind kind = parse_complex_kind(complex);
  const AlgebraPtr a = ptr_of(alg);
  EngineOptions opts;
  opts.shuffle_seed = seed;
  const auto rep = betti(kind, pi, kind == ComplexKind::base ? nullptr : a, pmin, pmax.value_or(pi.nvars()), degree,
                         opts);
  return report_to_json(rep, seed).dump();
}

std::vector<std::string> center_text(const PoissonStructure& pi, unsigned degree, const OptAlgebra& a,
                                     const std::string& complex) {
  return center_report(pi, algebra_or_real(a), degree, parse_complex_kind(complex)).text;
}

py::list verify_suite(const std::string& suite, std::uint64_t seed) {
  py::list out;
  for (const auto& c : run_suite(suite, seed).checks) {
    py::dict d;
    d["name"] = c.name;
    d["passed"] = c.passed;
    d["cases"] = c.cases;
    d["witness"] = c.witness;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_weilcore, m) {
  m.doc() = "Exact Weil algebras, prolonged Poisson structures and truncated Poisson cohomology";

  // Later registrations are tried first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MismatchError>(m, "MismatchError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<Algebra>(m, "WeilAlgebra")
      .def_property_readonly("dim", [](const Algebra& a) { return a.ptr->dim(); })
      .def_property_readonly("height", [](const Algebra& a) { return a.ptr->height(); })
      .def_property_readonly("labels", [](const Algebra& a) { return a.ptr->labels(); })
      .def_property_readonly("name", [](const Algebra& a) { return a.ptr->name(); })
      .def("ideal_power_dim", [](const Algebra& a, unsigned k) { return a.ptr->ideal_power_dim(k); })
      .def("__repr__", [](const Algebra& a) { return "<WeilAlgebra " + a.ptr->name() + ">"; });

  m.def(
      "jet", [](std::size_t r, unsigned k) { return Algebra{WeilAlgebra::jet(r, k)}; }, py::arg("generators"),
      py::arg("order"));
  m.def("real", [] { return Algebra{WeilAlgebra::real()}; });
  m.def(
      "algebra_from_json", [](const std::string& text) { return Algebra{algebra_from_json(Json::parse(text))}; },
      py::arg("text"));

  py::class_<PoissonStructure>(m, "PoissonStructure")
      .def_property_readonly("nvars", &PoissonStructure::nvars)
      .def_property_readonly("name", &PoissonStructure::name)
      .def_property_readonly("homogeneity", [](const PoissonStructure& p) { return to_string(p.homogeneity()); })
      .def("__repr__", [](const PoissonStructure& p) { return "<PoissonStructure " + p.name() + ">"; });

  m.def("symplectic", &PoissonStructure::symplectic, py::arg("n"));
  m.def("so3", &PoissonStructure::so3);
  m.def("zero_structure", &PoissonStructure::zero, py::arg("n"));
  m.def(
      "structure_from_json", [](const std::string& text) { return structure_from_json(Json::parse(text)); },
      py::arg("text"));

  m.def("bracket", &bracket_text, py::arg("structure"), py::arg("f"), py::arg("g"),
        py::arg("algebra") = py::none());
  m.def(
      "prolong", [](const std::string& f, std::size_t nvars, const Algebra& a) {
        return to_string(prolong_function(parse_poly(f, nvars), a.ptr));
      },
      py::arg("f"), py::arg("nvars"), py::arg("algebra"));
  m.def("eval", &eval_text, py::arg("algebra"), py::arg("f"), py::arg("at"));
  m.def("_betti_json", &betti_json, py::arg("structure"), py::arg("complex") = "base", py::arg("degree") = 2,
        py::arg("algebra") = py::none(), py::arg("pmin") = 0, py::arg("pmax") = std::nullopt,
        py::arg("seed") = std::nullopt);
  m.def("center", &center_text, py::arg("structure"), py::arg("degree"), py::arg("algebra") = py::none(),
        py::arg("complex") = "base");
  m.def("verify", &verify_suite, py::arg("suite") = "all", py::arg("seed") = 1);
}
