#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lsa {

// Exit codes of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;   // validation failure, malformed file, residual above tolerance
inline constexpr int kExitUsage = 2;     // bad arguments or unreadable file
inline constexpr int kExitInternal = 3;  // an identity that must hold did not

// args excludes the program name. Reports go to out as "key = value" lines, diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsa
