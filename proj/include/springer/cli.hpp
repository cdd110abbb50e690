#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace springer::cli {

// Runs one CLI invocation; returns the process exit code
// (0 success, 1 domain error, 2 usage error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace springer::cli
