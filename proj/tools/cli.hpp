#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latq::cli {

/// Runs the command line tool. argv-style arguments without the program name.
/// Returns the process exit code: 0 success, 1 violation found, 2 partial
/// results, 64 usage/file problems, 65 invalid lattice input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latq::cli
