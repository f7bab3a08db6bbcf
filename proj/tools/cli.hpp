#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace markov {

/// Runs one command line (without the program name). Exit codes: 0 success
/// or accept, 1 reject or inapplicable move, 2 malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace markov
