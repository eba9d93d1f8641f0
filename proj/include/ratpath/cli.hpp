#pragma once

#include <ostream>

namespace ratpath {

// Command-line front end.  Parses argv, writes results to out and
// diagnostics to err.  Returns 0 on success, 1 when a verification suite
// reports failures, 2 on usage or domain errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ratpath
