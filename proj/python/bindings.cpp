#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deltabound/delta_bounds.hpp"
#include "deltabound/errors.hpp"
#include "deltabound/exact_constants.hpp"
#include "deltabound/heat_kernel.hpp"
#include "deltabound/huber.hpp"
#include "deltabound/scenario_io.hpp"
#include "deltabound/supnorm.hpp"
#include "deltabound/verify.hpp"

namespace py = pybind11;
using namespace deltabound;

namespace {

py::tuple quad(const QuadratureResult& r) { return py::make_tuple(r.value, r.error_estimate); }

SurfaceInvariants surface(int genus, double systole, double lambda1) {
  SurfaceInvariants s;
  s.genus = genus;
  s.systole = systole;
  s.lambda1 = lambda1;
  return s;
}

EvalOptions options(const std::string& mode, bool rounded) {
  EvalOptions o;
  o.mode = parse_mode(mode);
  o.rounded = rounded;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Effective upper bounds for Faltings's delta function";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);

  m.def("k0", [](double t, double rho) { return quad(k0({t, rho})); }, py::arg("t"), py::arg("rho"),
        "Scalar heat kernel as (value, error_estimate).");
  m.def("k1", [](double t, double rho) { return quad(k1({t, rho})); }, py::arg("t"), py::arg("rho"),
        "Weight-1 heat kernel as (value, error_estimate).");
  m.def("k1_upper", [](double t, double rho) {
        const auto u = k1_upper_terms({t, rho});
        return py::make_tuple(u.a1, u.a2, u.a3);
      }, py::arg("t"), py::arg("rho"));

  m.def("s_x_closed", &s_x_closed, py::arg("ell0"), py::arg("rounded") = false);
  m.def("s_x_quadrature_bound", [](double ell0, double t0) { return quad(s_x_quadrature_bound(ell0, t0)); },
        py::arg("ell0"), py::arg("t0") = 10.0);

  m.def("huber_log_bound", [](int g, double ell, double lambda1, const std::string& mode) {
        return huber_chain(g, ell, lambda1, parse_mode(mode)).final_bound.log();
      }, py::arg("genus"), py::arg("systole"), py::arg("lambda1"), py::arg("mode") = "paper",
      "Natural log of the Huber constant bound.");
  m.def("c22_margin", &c22_margin, py::arg("r"));

  m.def("single_surface_log_bound", [](int g, double ell, double lambda1, const std::string& mode, bool rounded) {
        return cor_6_3(surface(g, ell, lambda1), options(mode, rounded)).final.log();
      }, py::arg("genus"), py::arg("systole"), py::arg("lambda1"), py::arg("mode") = "paper",
      py::arg("rounded") = false);

  m.def("evaluate_json", [](const std::string& text, std::optional<std::string> mode, bool rounded) {
        const ScenarioFile f = parse_scenario(text);
        std::optional<Mode> override;
        if (mode) override = parse_mode(*mode);
        return to_json(evaluate_scenario(f, options_for(f, override, rounded))).dump();
      }, py::arg("text"), py::arg("mode") = py::none(), py::arg("rounded") = false,
      "Evaluates a scenario document and returns the report as JSON text.");

  m.def("constant_ledger", [] {
    py::list out;
    for (const auto& c : constant_ledger())
      out.append(py::dict(py::arg("label") = c.label, py::arg("derived") = c.derived,
                          py::arg("relation") = c.relation, py::arg("published") = c.published,
                          py::arg("holds") = c.holds));
    return out;
  });

  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name) {
    const auto s = run_suite(name);
    return py::dict(py::arg("name") = s.name, py::arg("checks_run") = s.checks_run,
                    py::arg("failures") = s.failures, py::arg("inconclusive") = s.inconclusive,
                    py::arg("worst_margin") = s.worst_margin);
  }, py::arg("name"));
}
