#pragma once

// Command-line surface. run_cli is the whole program (the binary's main just
// forwards), which keeps every subcommand testable in-process.
// Exit codes: 0 success, 1 domain errors (bad code file, cap exceeded),
// 2 usage errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace nrt {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nrt
