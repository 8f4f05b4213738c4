#ifndef PCUBE_CLI_HPP
#define PCUBE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pcube::cli {

// Dispatches one command line. Exit codes: 0 = success / affirmative answer,
// 1 = well-formed negative answer, 2 = usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcube::cli

#endif
