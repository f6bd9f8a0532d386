#pragma once

#include <string>
#include <vector>

namespace regretforge {

// Shared by the regretforge binary and in-process callers. Exit codes:
// 0 success, 1 verification failure, 2 validation error, 3 unsupported input.
int run_cli(const std::vector<std::string>& args);

}  // namespace regretforge
