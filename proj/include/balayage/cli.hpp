#pragma once

#include <iosfwd>

namespace balayage {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitNumeric = 3;

// Commands: hm, balayage, check, growth, potential, crg.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace balayage
