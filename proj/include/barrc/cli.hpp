#pragma once

#include <iosfwd>

namespace barrc {

/// Runs the command line tool. Returns 0 when no unsuppressed error remains, 1 when one does,
/// and 2 for usage, config or file errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace barrc
