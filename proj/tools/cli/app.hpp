#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace horikawa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // domain error or failed check
inline constexpr int kExitUsage = 2;

/// Entry point behind the `horikawa` binary; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horikawa::cli
