#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sck::cli {

// Runs one CLI invocation. Exit codes: 0 success, 1 when the queried
// property does not hold, 2 for usage or format errors.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sck::cli
