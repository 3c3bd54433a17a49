// ellip: JSON command surface over the library.
//
//   ellip <subcommand> [--input path|-] [--output path|-] [--precision d]
//                      [--seed n] [--curve json] [--lattice json]
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 malformed input,
// 3 domain error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"

using ellip::cli::json;

namespace {

/// Empty input reads as {}. On failure `error` is set.
json read_input(const std::string& path, std::string& error) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) {
      error = "cannot read " + path;
      return nullptr;
    }
    ss << f.rdbuf();
  }
  std::string text = ss.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return json::object();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    error = std::string("input is not valid JSON: ") + e.what();
    return nullptr;
  }
}

void write_output(const std::string& path, const json& doc) {
  if (path == "-") {
    std::cout << doc.dump(2) << std::endl;
    return;
  }
  std::ofstream f(path);
  f << doc.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  ellip::cli::Flags flags;
  CLI::App app{"Difference and differential algebra over elliptic function fields"};
  app.require_subcommand(1);
  app.add_option("--input", flags.input, "input JSON path, - for stdin");
  app.add_option("--output", flags.output, "output path, - for stdout");
  app.add_option("--precision", flags.precision, "decimal digits of numeric checks")->check(CLI::Range(15, 1000));
  app.add_option("--seed", flags.seed, "seed for randomized checks");
  app.add_option("--curve", flags.curve, "curve as JSON, overrides the input's \"curve\"");
  app.add_option("--lattice", flags.lattice, "lattice as JSON, overrides the input's \"lattice\"");
  std::string chosen;
  for (const auto& [name, help] : ellip::cli::command_list()) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (name == "selftest") {
      sub->add_option("--level", flags.level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
      sub->add_flag("--fault", flags.fault, "inject an arithmetic fault into every criterion");
    }
    sub->callback([&chosen, name = name] { chosen = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  std::string error;
  json input = chosen == "selftest" ? json::object() : read_input(flags.input, error);
  if (!error.empty()) {
    write_output(flags.output, {{"command", chosen}, {"error", {{"kind", "SchemaError"}, {"message", error}}},
                                {"pass", false}});
    return 2;
  }
  ellip::cli::Outcome out = ellip::cli::run_command(chosen, input, flags);
  write_output(flags.output, out.document);
  return out.exit_code;
}
