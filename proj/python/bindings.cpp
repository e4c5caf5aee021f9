#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tmfejer/analysis.hpp"
#include "tmfejer/config.hpp"
#include "tmfejer/errors.hpp"
#include "tmfejer/operators.hpp"
#include "tmfejer/report.hpp"

namespace py = pybind11;
using namespace tmfejer;

namespace {

Command parse_command(const std::string& name) {
  const auto c = command_from_string(name);
  if (!c) throw Error(ErrorCode::kInvalidArgument, "unknown command '" + name + "'");
  return *c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Takenaka-Malmquist systems and Fejer-type operators";

  // Messages read "Code: detail", e.g. "PoleProximity: ...".
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<PointSequence>(m, "PointSequence")
      .def(py::init<std::vector<Complex>>(), py::arg("points"))
      .def_static("zeros", &PointSequence::zeros)
      .def_static("constant", &PointSequence::constant, py::arg("value"), py::arg("count"))
      .def("__len__", &PointSequence::size)
      .def("__getitem__",
           [](const PointSequence& a, std::size_t k) {
             if (k >= a.size()) throw py::index_error();
             return a[k];
           })
      .def("points", [](const PointSequence& a) {
        return std::vector<Complex>(a.points().begin(), a.points().end());
      });

  py::class_<TMBasis>(m, "TMBasis")
      .def(py::init<PointSequence, std::size_t>(), py::arg("sequence"), py::arg("order"))
      .def_property_readonly("order", &TMBasis::order)
      .def("phi", &TMBasis::phi, py::arg("k"), py::arg("z"))
      .def("phi_derivative", &TMBasis::phi_derivative, py::arg("k"), py::arg("z"))
      .def("blaschke", [](const TMBasis& b, Complex z) {
        const BlaschkeEval e = b.blaschke(z);
        return py::make_tuple(e.value, e.derivative);
      });

  m.def("eval_blaschke",
        [](const PointSequence& a, std::size_t n, Complex z) {
          const BlaschkeEval e = eval_blaschke(a, n, z);
          return py::make_tuple(e.value, e.derivative);
        },
        py::arg("a"), py::arg("n"), py::arg("z"), "(B_n(z), B_n'(z))");
  m.def("boundary_phase", &boundary_phase, py::arg("a"), py::arg("n"), py::arg("x"), py::arg("y"));
  m.def("cd_kernel", &cd_kernel, py::arg("basis"), py::arg("z"), py::arg("t"));
  m.def("fejer_kernel", &fejer_kernel, py::arg("basis"), py::arg("t"), py::arg("z"));

  py::class_<AnalyticTestFunction>(m, "TestFunction")
      .def_property_readonly("name", &AnalyticTestFunction::name)
      .def("__call__", &AnalyticTestFunction::value)
      .def("derivative", &AnalyticTestFunction::derivative);
  m.def("test_function", &corpus::by_name, py::arg("spec"),
        "Named corpus member, e.g. 'e0', 'w0', 'power(3)', 'mobius(0.3)', 'pole(0.6)'");

  m.def("sigma_positive",
        [](const AnalyticTestFunction& f, const TMBasis& basis, const std::vector<Complex>& z) {
          const SigmaPositive sigma(f, basis);
          std::vector<Complex> out;
          out.reserve(z.size());
          for (const Complex& p : z) out.push_back(sigma(p));
          return out;
        },
        py::arg("f"), py::arg("basis"), py::arg("z"));
  m.def("sigma_positive_mobius", &sigma_positive_mobius, py::arg("basis"), py::arg("alpha"),
        py::arg("z"));
  m.def("delta",
        [](const AnalyticTestFunction& f, const TMBasis& basis, Complex z) { return delta(f, basis, z); },
        py::arg("f"), py::arg("basis"), py::arg("z"));
  m.def("voronovskaya_bound", &voronovskaya_bound, py::arg("basis"), py::arg("z"));
  m.def("schur_bounds", [](const TMBasis& basis, Complex z) {
    const SchurBounds b = schur_bounds(basis, z);
    return py::make_tuple(b.lower, b.upper);
  });
  m.def("frostman_minimum",
        [](const PointSequence& a, std::size_t n) {
          const FrostmanMinimum r = frostman_minimum(a, n);
          return py::make_tuple(r.value, r.angle);
        },
        py::arg("a"), py::arg("n"));
  m.def("cesaro_e0", &cesaro_e0, py::arg("a"), py::arg("n"), py::arg("t"));

  m.def("run",
        [](const std::string& command, const std::string& config_text, const std::string& format) {
          const ExperimentConfig cfg = parse_config(config_text);
          const Report report = run_experiment(parse_command(command), cfg);
          return serialize(report, format == "json" ? OutputFormat::kJson : OutputFormat::kCsv);
        },
        py::arg("command"), py::arg("config"), py::arg("format") = "json",
        "Run an experiment from config text; returns the serialized report");
}
