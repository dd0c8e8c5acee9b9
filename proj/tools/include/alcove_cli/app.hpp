#pragma once

#include <string>
#include <vector>

namespace alcove::cli {

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Exit codes: 0 ok, 1 a verify suite failed, 2 invalid input, 3 resource cap hit.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResource = 3;

/// Runs one command line (without the program name) and captures its output.
RunResult run(const std::vector<std::string>& args);

}  // namespace alcove::cli
