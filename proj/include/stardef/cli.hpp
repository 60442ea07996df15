#ifndef STARDEF_CLI_HPP
#define STARDEF_CLI_HPP

// Batch front end: demos and verification suites with JSON reports.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace stardef::cli {

/// Seed used when --seed is not given.
constexpr std::uint64_t default_seed = 20240607;

enum ExitCode : int { Pass = 0, ViolationFound = 1, UsageError = 2 };

/// Runs one invocation; `args` excludes the program name. The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stardef::cli

#endif
