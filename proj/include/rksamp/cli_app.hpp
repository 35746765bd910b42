#pragma once

// Command-line front end, callable in-process so tests can drive it without
// spawning.  Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 internal assertion.

#include <iosfwd>
#include <string>
#include <vector>

namespace rksamp {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace rksamp
