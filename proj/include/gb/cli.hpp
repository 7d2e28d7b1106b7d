#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gb::cli {

/// Runs one subcommand and writes the report to `out`. Exit codes: 0 on
/// success, 1 on input errors (malformed file, failed validation, bad
/// arguments), 2 when a bound verdict is violated or a verification fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gb::cli
