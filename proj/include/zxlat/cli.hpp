#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zxlat {

// Exit codes of the command-line front-end.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 2,
    kExitUnsupported = 3,
    kExitUsage = 64,
};

// args excludes the program name. Input is read from --in FILE or `in`;
// output goes to --out FILE or `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace zxlat
