#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blockwords {

// Runs one CLI invocation; `args` excludes the program name. Exit codes:
// 0 success or verified, 1 verification failed, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockwords
