#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace symporb::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kInputError = 2,
  kResourceCap = 3,
};

enum class Format { kText, kJson, kDot };

inline constexpr int kHardMaxDegree = 14;

struct RunConfig {
  int max_degree = 10;  // even, >= 2, <= kHardMaxDegree
  unsigned workers = 1;
  std::uint64_t seed = 0;
  Format output = Format::kText;
};

// Parses argv, dispatches to a subcommand and returns its exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience for tests: run({"analyze", "2143"}, ...).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symporb::cli
