#pragma once

// Command-line front end.  `run` parses the argument vector (program name
// excluded), executes one subcommand, and writes the report to the given
// streams.

#include <ostream>
#include <string>
#include <vector>

namespace sacs {

// Exit codes: 0 = YES / valid, 1 = NO, 2 = input or validator error (also
// a fast-path disagreement), 3 = integrality violation, 4 = usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sacs
