#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kmflat {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one subcommand. `args` excludes the program name. Returns 0 on
/// success, 1 on a domain error (JSON error object on `out`), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kmflat
