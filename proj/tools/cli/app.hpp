#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace snoise {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitCalibration = 4;

// Runs one `snoise` invocation; args exclude the program name. Errors are
// reported as a single line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snoise
