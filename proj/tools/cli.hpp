#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bigfree::cli {

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2 };

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`; the return value is the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bigfree::cli
