#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace incalg::cli {

/// Runs one command. `args` excludes the program name. Returns the exit code:
/// 0 on success, 1 on malformed input, 2 on a domain error (reported as JSON).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace incalg::cli
