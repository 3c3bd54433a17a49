#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ellip::suites {

enum class Level { Fast, Full };

struct Options {
  Level level = Level::Full;
  std::uint64_t seed = 1;
  /// Corrupt one computed result per criterion; every criterion must fail.
  bool inject_fault = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  long instances = 0;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

using ResultSink = std::function<void(const CriterionResult&)>;

/// Runs the nine acceptance criteria in order. A criterion passes when all
/// its checks hold and it finishes within its time limit.
std::vector<CriterionResult> run_acceptance(const Options& opt, const ResultSink& sink = {});

/// "PASS [3] isogeny ... (12 instances, 1.4 s / 60 s)".
std::string format_line(const CriterionResult& r);

}  // namespace ellip::suites
