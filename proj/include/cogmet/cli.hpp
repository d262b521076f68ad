#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cogmet::cli {

// Dispatches one invocation. `args` excludes the program name. Results go
// to `out`, single-line diagnostics to `err`. Exit codes: 0 success,
// 1 usage error, 2 input validation error, 3 numeric domain error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace cogmet::cli
