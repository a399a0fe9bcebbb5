#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace extremal::cli {

// Exit codes of the tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;       // a verification inside the run did not hold
inline constexpr int kExitInvalidInput = 2;  // bad flags, malformed JSON, out-of-range parameters

// Runs the tool on argv[1..] (program name excluded). The command's output
// JSON goes to `out` on one line; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extremal::cli
