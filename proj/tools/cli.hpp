#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jetinv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapExceeded = 3;

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kCapEnvVar = "JETINV_MONOMIAL_CAP";

// args excludes the program name. Results go to `out` (or to --output when
// given), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetinv::cli
