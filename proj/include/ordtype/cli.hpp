#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordtype {

inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args[0] is the program name). Subcommands:
//   tau <expr>        order, spectrum, tau_e and progression verdict
//   info <expr>       structural profile
//   verify --suite <name> [--max-order k] [--json path] [--threads n]
//   search [--max-order k] --tau-size s [--ap]
//   ingest <path> [--export path]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordtype
