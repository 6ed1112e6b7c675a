#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ternary::cli {

enum class OutputFormat { Human, Json, Csv };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err` as a single line. Returns the process exit code:
/// 0 on success, 1 for runtime errors, 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ternary::cli
