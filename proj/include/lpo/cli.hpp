#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpo {

inline constexpr const char* kToolVersion = "1.0.0";

/// Dispatches the CLI (args exclude the program name). Exit codes:
/// 0 ok, 1 verification failure or validation rejection, 2 usage error,
/// 3 budget exhausted.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lpo
