#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace galperin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIndeterminate = 3;

const char* version() noexcept;

/// %.<digits>g, the one number format used for every output.
std::string format_number(double value, int digits);

/// Entry point behind the pi-billiards executable. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galperin::cli
