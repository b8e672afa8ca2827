#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotpoly {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kPrecondition = 2, kInvariant = 3 };

// args excludes the program name. Data goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotpoly
