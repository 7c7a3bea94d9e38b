#pragma once

#include <iosfwd>

namespace bilateral::cli {

/// Runs one command line. Exit status: 0 success or identity holds, 1 an
/// identity check failed, 2 invalid input or numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bilateral::cli
