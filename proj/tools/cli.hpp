#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tough::cli {

/// Runs one command line (args exclude the program name). Returns the exit
/// code: 0 success, 1 verification failure or bad input, 2 inconclusive.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tough::cli
