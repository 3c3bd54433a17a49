// Acceptance criteria, one PASS/FAIL line each. Exit status is the number of
// failed criteria.

#include <CLI11.hpp>

#include <cstdio>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  ellip::suites::Options opt;
  std::string level = "full";
  CLI::App app{"acceptance criteria"};
  app.add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  app.add_option("--seed", opt.seed, "seed of the random instances");
  app.add_flag("--fault", opt.inject_fault, "corrupt one result per criterion");
  CLI11_PARSE(app, argc, argv);
  opt.level = level == "fast" ? ellip::suites::Level::Fast : ellip::suites::Level::Full;
  int failed = 0;
  ellip::suites::run_acceptance(opt, [&](const ellip::suites::CriterionResult& r) {
    std::printf("%s\n", ellip::suites::format_line(r).c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  });
  std::printf("%d of 9 criteria failed\n", failed);
  return failed;
}
