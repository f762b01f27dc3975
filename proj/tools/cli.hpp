#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyadkde::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

//! Entry point for the `dyadkde` tool. `args` excludes the program name.
//! Subcommands: estimate, simulate, design, validate.
//! Returns 0 on success, 2 on a usage error, 1 when the input data is invalid.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyadkde::cli
