#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace milnor::cli {

enum ExitCode : int {
  kOk = 0,
  kFalsified = 1,
  kUsage = 2,
  kPrecondition = 3,
};

/// Runs one subcommand; reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "5,13,89" and ranges "a..b" (inclusive, primes only) into a
/// sorted, deduplicated list.
std::vector<unsigned> parse_prime_list(const std::string& text);

}  // namespace milnor::cli
