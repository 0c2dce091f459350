#ifndef ATMATCH_CLI_HPP
#define ATMATCH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace atmatch {

// Runs one command line (without the program name). Exit status: 0 success,
// 1 verification or search failure, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atmatch

#endif
