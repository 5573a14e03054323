#ifndef TUBIX_CLI_HPP
#define TUBIX_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tubix::cli {

// sysexits-style codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitIncomplete = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitIoError = 74;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tubix::cli

#endif
