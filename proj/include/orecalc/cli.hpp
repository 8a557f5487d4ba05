#pragma once

#include "orecalc/algebra.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace orecalc {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitEngine = 3;

// Shared by `check` and the REPL so both print the same bytes.
struct CheckOutcome {
  bool passed = false;
  std::string text;  // newline-terminated
};
CheckOutcome check_equal(const Algebra& algebra, const std::string& lhs, const std::string& rhs);

// One golden case: input expression, expected canonical text, provenance tag.
struct GoldenCase {
  std::string expression;
  std::string expected;
  std::string tag;
  int line = 0;
};

// Tab-separated, one case per line; blank lines and '#' comments skipped.
std::vector<GoldenCase> parse_golden_cases(std::string_view text);
Report golden_case_report(const Algebra& algebra, const std::vector<GoldenCase>& cases);

// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace orecalc
