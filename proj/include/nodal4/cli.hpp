#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nodal4 {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitNotGeneric = 2,
  kExitImaginaryNode = 3,
  kExitDifferentClass = 4,
  kExitVerification = 5,
};

/// Runs one subcommand; args excludes the program name. Output goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// NODAL4_RESOLUTION when set to a positive integer, else 512.
int default_resolution();

}  // namespace nodal4
