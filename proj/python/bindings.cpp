// Thin JSON-in, JSON-out bindings; the Python package decodes the strings.

#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "detsing/io.hpp"
#include "detsing/random.hpp"

namespace py = pybind11;
using namespace detsing;
using nlohmann::json;

namespace {

Settings settings_for(const std::string& mode, unsigned trials) {
  Settings s;
  if (mode == "modular")
    s.arithmetic = Arithmetic::Modular;
  else if (mode != "rational")
    fail(ErrorKind::Parse, "mode must be 'rational' or 'modular', got '" + mode + "'");
  if (trials > 0) s.trials = trials;
  return s;
}

std::string check(const std::string& descriptor, const std::string& mode) {
  Settings s = settings_for(mode, 0);
  py::gil_scoped_release release;
  return check_report(parse_descriptor(descriptor), s.arithmetic).dump();
}

std::string invariants(const std::string& descriptor, std::uint64_t seed,
                       const std::optional<std::string>& hyperplane, bool le_greuel,
                       const std::string& mode) {
  Settings s = settings_for(mode, 0);
  py::gil_scoped_release release;
  VarietyDescriptor d = parse_descriptor(descriptor);
  DetVariety v = build_variety(d, s.arithmetic);
  std::optional<LinearForm> top;
  if (hyperplane) top = descriptor_hyperplane(d, v.ring(), *hyperplane);
  json result = {{"report", to_json(invariant_chain(v, seed, s, top))}};
  if (le_greuel) {
    LinearForm p = top ? *top
                       : random_form(v.ring(), derive_seed(seed, "le-greuel-form"),
                                     s.coefficient_bound);
    result["le_greuel"] = to_json(le_greuel_check(v, p, seed, s));
    result["le_greuel"]["form"] = to_string(p.poly());
  }
  return result.dump();
}

std::string genericity(const std::string& descriptor, const std::string& hyperplane,
                       std::uint64_t seed, unsigned trials, const std::string& mode) {
  Settings s = settings_for(mode, trials);
  py::gil_scoped_release release;
  VarietyDescriptor d = parse_descriptor(descriptor);
  DetVariety v = build_variety(d, s.arithmetic);
  return to_json(is_strongly_general(v, descriptor_hyperplane(d, v.ring(), hyperplane), seed, s))
      .dump();
}

std::string search(const std::string& descriptor, std::uint64_t seed, unsigned trials,
                   const std::string& mode) {
  Settings s = settings_for(mode, trials);
  py::gil_scoped_release release;
  DetVariety v = build_variety(parse_descriptor(descriptor), s.arithmetic);
  return to_json(minimal_invariant_search(v, seed, s)).dump();
}

std::string swallowtail(const std::string& mode) {
  Settings s = settings_for(mode, 0);
  py::gil_scoped_release release;
  return to_json(swallowtail_demo(s.arithmetic)).dump();
}

std::size_t milnor_number(const std::vector<std::string>& variables, const std::string& f) {
  auto ring = make_ring(variables);
  return milnor_number_isolated_hypersurface(parse_poly(ring, f));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Invariants of essentially isolated determinantal singularities";
  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  (void)error;
  m.attr("DESCRIPTOR_SCHEMA") = kDescriptorSchema;
  m.attr("REPORT_SCHEMA") = kReportSchema;
  m.def("check", &check, py::arg("descriptor"), py::arg("mode") = "rational");
  m.def("invariants", &invariants, py::arg("descriptor"), py::arg("seed") = 1,
        py::arg("hyperplane") = py::none(), py::arg("le_greuel") = false,
        py::arg("mode") = "rational");
  m.def("genericity", &genericity, py::arg("descriptor"), py::arg("hyperplane"),
        py::arg("seed") = 1, py::arg("trials") = 0, py::arg("mode") = "rational");
  m.def("search", &search, py::arg("descriptor"), py::arg("seed") = 1, py::arg("trials") = 0,
        py::arg("mode") = "rational");
  m.def("swallowtail", &swallowtail, py::arg("mode") = "rational");
  m.def("milnor_number", &milnor_number, py::arg("variables"), py::arg("f"));
}
