#pragma once

#include <iosfwd>

namespace angleset::cli {

/// Full command-line entry point (parse + dispatch). Returns the process
/// exit code: 0 success/pass, 1 verification failure, 2 usage or parse
/// error, 3 budget refusal.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace angleset::cli
