#pragma once

#include <string>
#include <vector>

namespace chunkqe {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitQueryFailures = 1;  // outputs written, some queries failed
inline constexpr int kExitError = 2;          // bad configuration or input

/// Entry point of the `chunkqe` tool; argv[0] is the program name.
int run_cli(int argc, const char* const* argv);
/// Same, with the arguments after the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace chunkqe
