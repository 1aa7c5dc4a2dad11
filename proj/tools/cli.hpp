#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sfkit {

/// Runs one CLI invocation. Returns the process exit status: 0 on success,
/// 1 on invalid input or internal errors, 2 when a verification-style command
/// reports a negative verdict.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfkit
