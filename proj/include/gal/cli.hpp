#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gal {

/// Runs one `gal` invocation. `args` excludes the program name. Writes one
/// JSON document to `out` (or the --output file) and diagnostics to `err`.
/// Returns 0 for pass/found/feasible, 1 for fail/not-found/infeasible or an
/// incomplete search, 2 for usage and input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gal
