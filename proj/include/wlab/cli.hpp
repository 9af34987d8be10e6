#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Entry point behind the `wlab` binary. `args` excludes the program name.
// Reports go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Report tolerance: WLAB_TOL when set, 1e-10 otherwise. Throws BadParams on a
// malformed or non-positive value.
double report_tolerance();

}  // namespace wlab::cli
