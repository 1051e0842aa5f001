#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qojump/cli/io.hpp"
#include "qojump/error.hpp"

namespace qojump::cli {

enum ExitCode { kOk = 0, kSchemaFailure = 1, kValidationFailure = 2, kInternalFailure = 3 };

ExitCode exit_code_for(ErrorKind kind);

/// QOJUMP_THREADS, default 1; anything but a positive integer is a schema error.
unsigned threads_from_env();

/// Runs the command line; argv[0] is the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The analysis report of an input, as emitted by `analyze`.
Json analyze_report(const Input& in, unsigned threads, bool approx, const Rational* xi);

}  // namespace qojump::cli
