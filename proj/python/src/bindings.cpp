#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tauberkit/construction.hpp"
#include "tauberkit/derivatives.hpp"
#include "tauberkit/errors.hpp"
#include "tauberkit/inversion.hpp"
#include "tauberkit/quadrature.hpp"
#include "tauberkit/rate_function.hpp"
#include "tauberkit/verify.hpp"

namespace py = pybind11;
using namespace tauberkit;

namespace {

py::tuple log_pair(const LogComplex& v) { return py::make_tuple(v.log_mag, v.phase); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "tauberkit C++ core";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnboundedSearchError>(m, "UnboundedSearchError", base.ptr());
  py::register_exception<DegenerateRateError>(m, "DegenerateRateError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ToleranceError>(m, "ToleranceError", base.ptr());
  py::register_exception<ConstraintError>(m, "ConstraintError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<RateFunction>(m, "RateFunction")
      .def("__call__", &RateFunction::eval)
      .def("eval_log", &RateFunction::eval_log)
      .def_property_readonly("source", &RateFunction::source)
      .def_property_readonly("strictly_increasing", &RateFunction::strictly_increasing)
      .def("__repr__", [](const RateFunction& f) { return "RateFunction('" + f.source() + "')"; });

  m.def("parse_rate", [](const std::string& s) { return parse_rate(s); }, py::arg("dsl"));
  m.def("compose_mk", &compose_mk, py::arg("M"), py::arg("K"));
  m.def("right_inverse",
        [](const RateFunction& f, double t) { return right_inverse(f, t); }, py::arg("f"),
        py::arg("t"));
  m.def("predicted_rate",
        [](const RateFunction& mm, const RateFunction& k, double c, double t) {
          return predicted_rate(mm, k, c, t);
        },
        py::arg("M"), py::arg("K"), py::arg("c"), py::arg("t"));

  py::class_<QuadratureResult>(m, "QuadratureResult")
      .def_property_readonly("value", [](const QuadratureResult& r) { return r.value; })
      .def_readonly("abs_error_estimate", &QuadratureResult::abs_error_estimate)
      .def_readonly("truncation_bound", &QuadratureResult::truncation_bound)
      .def_readonly("nodes_used", &QuadratureResult::nodes_used);

  m.def("k_of", &k_of, py::arg("m"));
  m.def("f_eval", [](int mm, double t, double tol) { return f_eval(mm, t, tol); },
        py::arg("m"), py::arg("t"), py::arg("tol") = 1e-10);
  m.def("f_deriv_eval", [](int mm, double t, double tol) { return f_deriv_eval(mm, t, tol); },
        py::arg("m"), py::arg("t"), py::arg("tol") = 1e-8);
  m.def("h_eval", [](int mm, std::complex<double> z) { return log_pair(h_eval(mm, z)); },
        py::arg("m"), py::arg("z"), "(log|H_m(z)|, arg H_m(z))");
  m.def("phi_eval", [](int mm, std::complex<double> s) { return log_pair(phi_eval(mm, s)); },
        py::arg("m"), py::arg("s"));
  m.def("transform_eval",
        [](int mm, std::complex<double> l) { return log_pair(transform_eval(mm, l)); },
        py::arg("m"), py::arg("lam"));
  m.def("c_m_estimate",
        [](int mm, double upper) { return c_m_estimate(mm, c_m_default_grid(mm, upper)).value; },
        py::arg("m"), py::arg("upper") = 100.0);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("property_id", &VerificationReport::property_id)
      .def_readonly("extremum", &VerificationReport::extremum)
      .def_readonly("threshold", &VerificationReport::threshold)
      .def_readonly("passed", &VerificationReport::pass)
      .def_readonly("expected_failure", &VerificationReport::expected_failure)
      .def_readonly("notes", &VerificationReport::notes)
      .def("to_json", [](const VerificationReport& r) { return r.to_json().dump(); });

  m.def("verify_all",
        [](const std::string& config_json) {
          const auto config = VerifyConfig::from_json(nlohmann::json::parse(config_json));
          py::gil_scoped_release release;
          return verify_all(config);
        },
        py::arg("config_json"), "Runs the suite for a JSON config naming at least m_list.");
}
