#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sphroots::cli {

/// Runs the command line; returns the process exit code
/// (0 success, 1 verification failure, 2 invalid input or usage error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sphroots::cli
