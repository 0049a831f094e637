#pragma once

#include <iosfwd>

namespace divvol {

// Exit codes: 0 success, 1 invalid input, 2 class not pseudoeffective.
enum ExitCode : int { kExitOk = 0, kExitInvalid = 1, kExitNotPseff = 2 };

// Commands: validate, decompose, curve, asymptote, check, nef-expand.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace divvol
