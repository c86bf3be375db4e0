#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ascdesc::cli {

inline constexpr const char* kToolName = "ascdesc";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { ok = 0, parse_error = 2, has_fail = 3, all_inconclusive = 4 };

/// Runs one command line (args excludes the program name). The report goes to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count for batches: hardware concurrency, capped by ASCDESC_THREADS.
std::size_t worker_count();

}  // namespace ascdesc::cli
