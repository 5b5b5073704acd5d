#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdcyc {

// Exit statuses.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;
constexpr int kExitTooLarge = 4;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdcyc
