#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fov::cli {

/// Runs one command line (args excludes the program name). Returns 0 on
/// success, 1 when a suite fails, 2 on usage or input errors.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fov::cli
