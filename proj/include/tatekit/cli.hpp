#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tatekit {

// Dispatches one command line (without the program name) and returns the
// process exit code: 0 success, 1 a check reported REFUTED, 2 input error,
// 3 budget exhausted.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tatekit
