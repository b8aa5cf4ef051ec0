// Python bindings: the main operations as JSON-in / JSON-out calls, plus
// a few direct helpers. The python package wraps these with dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "lpackets/jobs.hpp"

namespace py = pybind11;

namespace {

std::string run_describe(const std::string& cfg) {
  return lpk::describe(lpk::parse_config_text(cfg)).dump();
}

std::string run_packet(const std::string& cfg) {
  return lpk::packet_report(lpk::parse_config_text(cfg)).dump();
}

std::string run_endoscopy(const std::string& cfg) {
  return lpk::endoscopy_report(lpk::parse_config_text(cfg)).dump();
}

std::string run_verify(const std::string& cfg) {
  return lpk::verify_report(lpk::parse_config_text(cfg)).dump();
}

std::string run_oracle_cmd(const std::string& family) {
  return lpk::oracle_report(family).dump();
}

std::size_t weyl_order(const std::string& group) {
  return lpk::weyl_group(lpk::make_datum(group)).size();
}

}  // namespace

PYBIND11_MODULE(_lpackets, m) {
  m.doc() = "discrete-series L-packets and endoscopic character identities";

  py::register_exception<lpk::Error>(m, "LpacketsError");

  m.def("describe_json", &run_describe, py::arg("config"),
        "root datum, gradings, cohomology (JSON string in/out)");
  m.def("packet_json", &run_packet, py::arg("config"),
        "packet members, classes, pairings (JSON string in/out)");
  m.def("endoscopy_json", &run_endoscopy, py::arg("config"),
        "endoscopic side summary (JSON string in/out)");
  m.def("verify_json", &run_verify, py::arg("config"),
        "endoscopic character identity check (JSON string in/out)");
  m.def("oracle_json", &run_oracle_cmd, py::arg("family"),
        "matrix-model cross check for A1-sc / A1-adj");
  m.def("weyl_order", &weyl_order, py::arg("group"),
        "order of the Weyl group of a builtin datum");
  m.def("builtin_groups", &lpk::builtin_names);
}
