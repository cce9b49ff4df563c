#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sievelab {

/// Parses argv-style arguments (program name excluded), dispatches to the
/// named operation, and writes data to `out` (or the --output path) and
/// diagnostics to `err`. Returns 0 on success, 1 when --strict verification
/// found findings, 2 on usage or I/O errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sievelab
