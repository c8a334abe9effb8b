#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spk::cli {

// Runs the command line given by args (without the program name), writing to
// the given streams.  Returns the process exit code: 0 all checks pass,
// 1 a verification failed, 2 usage or size-guard errors.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace spk::cli
