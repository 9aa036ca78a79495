#pragma once

#include <iosfwd>

namespace plucker::cli {

/// Runs the command line. Exit codes: 0 success, 1 negative verdict or
/// mismatch, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plucker::cli
