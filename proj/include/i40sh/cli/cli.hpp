#pragma once

#include <iosfwd>

namespace i40sh::cli {

// Exit codes: 0 success, 1 Violations / query diagnostics / rejected rows
// under --strict, 2 I/O, syntax, bind or header errors.
enum ExitStatus : int { kSuccess = 0, kFailure = 1, kError = 2 };

// Subcommands validate, query, serve, ingest and vocab. Machine output goes
// to `out`, logs and diagnostics to `err`. Every flag can also be set from
// an I40SH_<FLAG> environment variable.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace i40sh::cli
