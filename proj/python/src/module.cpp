#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <numeric>

#include "qgk/error.hpp"
#include "qgk/report.hpp"

namespace py = pybind11;
using namespace qgk;

namespace {

std::string dump(const Json& j) { return j.dump(); }

ToralWeight weight(const std::string& type, const std::string& literal) {
  return ToralWeight::parse(RootSystem::build(type), literal);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "QgkError", PyExc_ValueError);

  m.def("kappas", [](const std::string& type) { return dump(to_json(kappas(RootSystem::build(type)))); });
  m.def("cuspidal_possible", [](const std::string& type) { return cuspidal_possible(parse_type(type)); });
  m.def("subsystem", [](const std::string& type, const std::string& w) {
    return dump(to_json(subsystem_report(weight(type, w))));
  });
  m.def("gkdim", [](const std::string& type, const std::string& w) {
    return dump(to_json(gk_dimension(weight(type, w))));
  });
  m.def("afunction", [](const std::string& type) { return dump(to_json(afunction_summary(type))); });
  m.def("table2_row", [](const std::string& type, const std::string& data_dir) {
    std::string dir = data_dir.empty() ? default_data_dir() : data_dir;
    return dump(to_json(table2_row(type, load_fixture(dir + "/table2.json"))));
  }, py::arg("type"), py::arg("data_dir") = "");
  m.def("jantzen", [](const std::string& type, const std::string& w, const IVec& nu) {
    auto rs = RootSystem::build(type);
    auto sys = RewriteSystem::build(rs, static_cast<int>(std::max<long>(1, std::accumulate(nu.begin(), nu.end(), 0L))));
    return dump(to_json(jantzen_sum_check(sys, ToralWeight::parse(rs, w), nu)));
  });
  m.def("cross_check", [](const std::string& type, const IVec& nu, std::uint32_t seed) {
    auto rs = RootSystem::build(type);
    auto sys = RewriteSystem::build(rs, static_cast<int>(std::max<long>(1, std::accumulate(nu.begin(), nu.end(), 0L))));
    return dump(to_json(det_formula_cross_check(sys, nu, seed)));
  }, py::arg("type"), py::arg("nu"), py::arg("seed") = 0);
  m.def("growth", [](const std::string& type, const std::string& w, const std::vector<long>& ells, int m_) {
    py::gil_scoped_release release;
    return dump(to_json(growth_experiment(weight(type, w), ells, m_)));
  }, py::arg("type"), py::arg("weight"), py::arg("ells"), py::arg("m") = 8);
  m.def("realize", [](const std::string& type, const std::string& target, const std::string& field) {
    return dump(to_json(realize_report(type, target, parse_field(field))));
  });
}
