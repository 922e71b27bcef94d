// Command-line front end: evaluate class expressions, pair test curves
// with divisor classes, audit the built-in claim ledger, and print the
// curve catalog. All numeric output is exact rational text; no decimals.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace picalc {

// Runs the tool on already-split arguments (argv[1..argc-1]). Results go
// to `out`, diagnostics to `err`. Returns the process exit code:
//   0  success (for `verify`: no mismatch outside the allowlist)
//   1  `verify` found an unexpected mismatch or evaluation error
//   2  usage, parse or type error
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace picalc
