#pragma once

namespace oscpoly::cli {

// Full command-line front end. Subcommands: moments, hankel, poly, rule,
// integrate, certify, scan. Exit codes: 0 success, 2 usage/domain error,
// 3 degenerate or indeterminate existence, 4 numerical failure.
int run_cli(int argc, const char* const* argv);

}  // namespace oscpoly::cli
