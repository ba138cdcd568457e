#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "spinecheck/vfunc.hpp"

namespace spinecheck::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSelftestFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBatchErrors = 3;
inline constexpr int kExitSmoothSpine = 0;
inline constexpr int kExitObstructed = 10;
inline constexpr int kExitInconclusive = 20;

/// Runs the command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Processes JSON-lines cases {knot, genus, euler}; one output line per
/// nonblank input line, in input order. Returns kExitOk or kExitBatchErrors.
int run_batch(std::istream& in, std::ostream& out, std::size_t parallel, const VOptions& options);

/// Reads SPINECHECK_HORIZON (default 64). Throws ValidationError on bad values.
VOptions options_from_env();

}  // namespace spinecheck::cli
