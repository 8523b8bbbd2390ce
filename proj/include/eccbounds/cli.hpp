#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecc {

// Runs the command-line tool on natural-order arguments (program name
// excluded). Returns the process exit status: 0 success, 1 verification
// found violations, 2 usage or domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecc
