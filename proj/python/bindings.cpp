// Thin bindings: complexes and reports cross the boundary as JSON text, the
// Python package turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gimel/cube.hpp"
#include "gimel/errors.hpp"
#include "gimel/io.hpp"
#include "gimel/pipeline.hpp"
#include "gimel/verify.hpp"

namespace py = pybind11;
using namespace gimel;

namespace {

GradedFreeComplex complex_of(const std::string& fixture_json) { return fixture_from_json(Json::parse(fixture_json)); }

std::string report_json(const PipelineResult& r) { return report_to_json(r.report).dump(); }

Json verdict_json(const PropertyVerdict& v) {
  return {{"name", v.name}, {"holds", v.holds}, {"worst_t", to_string(v.worst_t)}, {"slack", to_string(v.slack)}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact slice-torus invariant engine";

  static py::exception<Error> error(m, "GimelError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object kind = py::str(std::string(to_string(e.kind())));
      PyErr_SetObject(error.ptr(), py::make_tuple(kind, e.what()).ptr());
    }
  });

  m.def("compute_fixture", [](const std::string& fixture) { return report_json(compute_from_complex(complex_of(fixture))); },
        py::arg("fixture_json"), "Report JSON for a fixture given as JSON text.");
  m.def("compute_pd", [](const std::string& pd) { return report_json(compute_from_pd(parse_pd(pd))); }, py::arg("pd"),
        "Report JSON for a knot diagram in PD notation (n = 2).");
  m.def("s_invariant",
        [](const std::string& fixture, const std::string& potential, const std::string& alpha) {
          return to_string(s_invariant(complex_of(fixture), RingCtx::specialized_from_string(potential),
                                       parse_rational(alpha)));
        },
        py::arg("fixture_json"), py::arg("potential"), py::arg("alpha"));
  m.def("tensor", [](const std::string& a, const std::string& b) {
    return fixture_to_json(tensor(complex_of(a), complex_of(b))).dump();
  });
  m.def("dual", [](const std::string& a) { return fixture_to_json(dual(complex_of(a))).dump(); });
  m.def("validate", [](const std::string& a) {
    ComplexReport r = validate(complex_of(a));
    return py::make_tuple(r.ok, r.failure, r.euler);
  });
  m.def("mirror_pd", [](const std::string& pd) { return mirror(parse_pd(pd)).to_string(); });
  m.def("gamma_at", [](const std::string& fixture, const std::string& t) {
    PipelineResult r = compute_from_complex(complex_of(fixture));
    return to_string(gamma_at(r.scalar, r.psi, parse_rational(t)));
  });
  m.def("verify", [](const std::string& gimel_json) {
    PiecewiseLinear g = piecewise_from_json(Json::parse(gimel_json));
    Json out = Json::array({verdict_json(check_cone(g)), verdict_json(check_gap(g))});
    return out.dump();
  });
}
