#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gentzen::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // the answer is no: invalid, no reduction, check failed, contradiction found
inline constexpr int kUsage = 2;     // bad arguments or unreadable input
inline constexpr int kRefused = 3;   // search above the ceiling
inline constexpr int kServer = 4;    // the server could not start

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gentzen::cli
