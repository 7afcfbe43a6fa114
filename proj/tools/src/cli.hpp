#pragma once

#include <iosfwd>

#include "idensity/error.hpp"

namespace idensity::cli {

/// Process exit code for an error category: 2 parse, 3 precondition,
/// 4 golden mismatch, 1 otherwise.
int exit_code(ErrorCode code);

/// Runs one command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace idensity::cli
