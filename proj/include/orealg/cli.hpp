#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orealg {

/// Exit codes of the command-line driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotFound = 2;  // bounded search came back empty

/// orealg <verb> <session-file> [args...] [--json] [--seed S] [--bound N]
/// (scenario takes p e m instead of a session file). args[0] is the program
/// name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The verbs cli_main accepts.
const std::vector<std::string>& cli_verbs();

}  // namespace orealg
