#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conckit::cli {

/// Runs one invocation. `args` excludes the program name. Returns 0 on
/// success, 1 on a domain error (the error name is printed to `err`) and 2
/// on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conckit::cli
