#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ellip/json_io.hpp"

namespace ellip::cli {

using io::json;

struct Flags {
  std::string input = "-";
  std::string output = "-";
  int precision = 30;
  std::uint64_t seed = 1;
  /// JSON text overriding the input's "curve" and "lattice" fields.
  std::string curve;
  std::string lattice;
  std::string level = "fast";
  bool fault = false;
};

struct Outcome {
  /// 0 all checks passed, 1 a check failed, 2 malformed input, 3 domain error.
  int exit_code = 0;
  /// {"command", "result", "checks", "pass"} or {"command", "error", "pass"}.
  json document;
};

/// Subcommand names with one-line descriptions.
std::vector<std::pair<std::string, std::string>> command_list();

Outcome run_command(const std::string& name, const json& input, const Flags& flags);

}  // namespace ellip::cli
