#pragma once

// Command-line surface. run() is the whole program behind a testable face:
// exit code 0 on success, 1 when a computation budget refuses the request,
// 2 on invalid input. Output is deterministic for fixed flags.

#include <iosfwd>
#include <string>
#include <vector>

namespace steiner::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace steiner::cli
