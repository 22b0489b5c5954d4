#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specjoin::cli {

// Runs the full command-line surface against the given argument list
// (without the program name) and streams; returns the process exit code:
// 0 success, 1 domain/validation failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace specjoin::cli
