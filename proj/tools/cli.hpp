#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stokes::cli {

enum ExitCode : int { ok = 0, usage = 2, io = 3 };

// Entry point of `stokes-squeeze`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stokes::cli
