#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commands.hpp"

namespace py = pybind11;

namespace {

/// (exit code, result document as JSON text).
std::pair<int, std::string> run(const std::string& command, const std::string& input, int precision,
                                std::uint64_t seed, const std::string& curve, const std::string& lattice,
                                const std::string& level, bool fault) {
  ellip::cli::Flags flags;
  flags.precision = precision;
  flags.seed = seed;
  flags.curve = curve;
  flags.lattice = lattice;
  flags.level = level;
  flags.fault = fault;
  ellip::cli::json doc;
  try {
    doc = input.empty() ? ellip::cli::json::object() : ellip::cli::json::parse(input);
  } catch (const ellip::cli::json::parse_error& e) {
    return {2, ellip::cli::json{{"command", command},
                                {"error", {{"kind", "SchemaError"}, {"message", e.what()}}},
                                {"pass", false}}
                   .dump()};
  }
  ellip::cli::Outcome out;
  {
    py::gil_scoped_release release;
    out = ellip::cli::run_command(command, doc, flags);
  }
  return {out.exit_code, out.document.dump()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "JSON command layer of the ellip library";
  m.def("run", &run, py::arg("command"), py::arg("input"), py::arg("precision") = 30, py::arg("seed") = 1,
        py::arg("curve") = "", py::arg("lattice") = "", py::arg("level") = "fast", py::arg("fault") = false);
  m.def("commands", &ellip::cli::command_list);
}
