#ifndef HEPTA_CLI_HPP_
#define HEPTA_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace hepta {

// Runs the command-line interface on the given arguments (program name
// excluded). Exit codes: 0 success, 1 verify mismatch, 2 singular matrix or
// float-mode pivot breakdown, 3 input error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hepta

#endif  // HEPTA_CLI_HPP_
