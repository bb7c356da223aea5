#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deltabox::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSearchCeiling = 3;

/// Output schema revision embedded in every JSON document.
inline constexpr const char* kSchemaVersion = "1.0";

std::string version();

/// Entry point of the `deltabox` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deltabox::cli
