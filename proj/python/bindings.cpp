// Python bindings: exact scalars, presets, diagrams and the invariant engines.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcoalg/invariants.hpp"

namespace py = pybind11;
using namespace qcoalg;

namespace {

// A loaded preset; twist-dependent calls fail when it has no G.
struct Structure {
  std::string name;
  Preset preset;

  const TwistOQC& twist() {
    if (!preset.G) throw InvalidParameter("structure '" + name + "' has no twist G");
    if (!tw) tw = make_twist(preset.oqc, *preset.G);
    return *tw;
  }
  std::optional<TwistOQC> tw;
};

Vec element_or_trace(Structure& S, const std::optional<Vec>& c) {
  if (c) return *c;
  const Coalgebra& C = S.preset.oqc.C;
  for (int n = 1; n * n <= C.dim; ++n)
    if (n * n == C.dim && C == comatrix(n)) return trace_element(n);
  throw InvalidParameter("trace needs a comatrix carrier");
}

py::dict report_dict(const Report& r) {
  py::dict d;
  for (const auto& it : r.items) d[py::str(it.name)] = it.pass;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qcoalg, m) {
  m.doc() = "exact invariants of tangles, knots and links from oriented quantum coalgebras";

  py::register_exception<PreconditionViolation>(m, "PreconditionViolation");
  py::register_exception<DiagramError>(m, "DiagramError", PyExc_ValueError);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
  py::register_exception<MalformedScalar>(m, "MalformedScalar", PyExc_ValueError);
  py::register_exception<AxiomViolation>(m, "AxiomViolation");

  py::class_<RF>(m, "Scalar")
      .def(py::init([](long v) { return RF(v); }), py::arg("value") = 0)
      .def(py::init(&parse_scalar), py::arg("text"))
      .def_static("q", &RF::q, py::arg("e") = 1)
      .def("is_zero", &RF::is_zero)
      .def("__str__", &RF::str)
      .def("__repr__", [](const RF& x) { return "Scalar('" + x.str() + "')"; })
      .def("__hash__", [](const RF& x) { return py::hash(py::str(x.str())); })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self);
  m.def("parse_scalar", &parse_scalar, py::arg("text"));

  py::class_<Structure>(m, "Structure")
      .def_readonly("name", &Structure::name)
      .def_property_readonly("dim", [](const Structure& s) { return s.preset.oqc.C.dim; })
      .def_property_readonly("labels", [](const Structure& s) {
        std::vector<std::string> out;
        for (int i = 0; i < s.preset.oqc.C.dim; ++i) out.push_back(s.preset.oqc.C.label(i));
        return out;
      })
      .def_property_readonly("has_twist", [](const Structure& s) { return s.preset.G.has_value(); })
      .def("basis", [](const Structure& s, const std::string& label) {
        int i = s.preset.oqc.C.index_of(label);
        if (i < 0) throw InvalidParameter("no basis element '" + label + "'");
        return basis_vector(s.preset.oqc.C.dim, i);
      })
      .def("check", [](Structure& s) {
        Report r = check_oqc(s.preset.oqc);
        if (s.preset.quantum) r.merge(check_qc(*s.preset.quantum), "quantum ");
        if (s.preset.G)
          for (const auto& it : check_twist(s.twist()).items)
            if (!r.find(it.name)) r.items.push_back(it);
        return report_dict(r);
      })
      .def("serialize", [](const Structure& s) {
        return serialize(s.preset.oqc, s.preset.G ? &*s.preset.G : nullptr);
      });

  m.def("load_preset", [](const std::string& spec) { return Structure{spec, load_preset(spec), {}}; }, py::arg("spec"));
  m.def("load_structure", [](const std::string& text) {
    auto L = parse_structure(text);
    return Structure{"file", Preset{"file", L.oqc, L.G, std::nullopt}, {}};
  }, py::arg("text"));

  py::class_<Diagram>(m, "Diagram")
      .def_property_readonly("is_link", [](const Diagram& d) { return d.kind == DiagramKind::link; })
      .def_property_readonly("crossings", &Diagram::crossings)
      .def("__str__", [](const Diagram& d) { return render(d); })
      .def("__eq__", [](const Diagram& a, const Diagram& b) { return a == b; });
  m.def("parse_diagram", &parse_diagram, py::arg("text"));
  m.def("builtin", &builtin, py::arg("name"));
  m.def("builtin_names", [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : builtin_sources()) out.push_back(k);
    return out;
  });
  m.def("render", &render);
  m.def("writhe", &writhe);
  m.def("whitney_degrees", &whitney_degrees);
  m.def("reverse", &reverse);
  m.def("mirror", &mirror);
  m.def("star", &star);
  m.def("closure", &closure);
  m.def("perturb", [](const Diagram& d, std::uint64_t seed, int moves) { return perturb(d, seed, moves); },
        py::arg("diagram"), py::arg("seed"), py::arg("moves"));

  m.def("inv_tangle", [](Structure& s, const Diagram& t) { return inv_tangle(s.preset.oqc, t); },
        py::arg("structure"), py::arg("tangle"));
  m.def("inv_knot", [](Structure& s, const Diagram& k, const std::optional<Vec>& c) {
    return inv_knot(s.twist(), element_or_trace(s, c), k);
  }, py::arg("structure"), py::arg("knot"), py::arg("element") = py::none());
  m.def("inv_link", [](Structure& s, const Diagram& l, const std::optional<Vec>& c) {
    return inv_link(s.twist(), element_or_trace(s, c), l);
  }, py::arg("structure"), py::arg("link"), py::arg("element") = py::none());
  m.def("oracle_contract", [](Structure& s, const Diagram& d, const std::optional<Vec>& c) {
    return oracle_contract(s.twist(), element_or_trace(s, c), d);
  }, py::arg("structure"), py::arg("diagram"), py::arg("element") = py::none());
  m.def("cocommutative_fast", [](Structure& s, const Vec& c, const Diagram& t) {
    return cocommutative_fast(s.preset.oqc, c, t);
  }, py::arg("structure"), py::arg("element"), py::arg("tangle"));
  m.def("evaluate", &evaluate, py::arg("functional"), py::arg("element"));
}
