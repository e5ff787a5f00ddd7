#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tmine {

// Runs one invocation; `args` excludes the program name. Returns the exit code:
// 0 success, 1 a verify check failed, 2 input or parse error, 3 constraint
// violation, 4 size guard.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace tmine
