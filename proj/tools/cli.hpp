#ifndef VTUTTE_TOOLS_CLI_HPP
#define VTUTTE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace vtutte::cli {

// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_not_vposet = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_oracle_bound = 3;
inline constexpr int exit_mismatch = 4;

/// Runs the command line `args` (args[0] is the program name). Input named
/// "-" is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace vtutte::cli

#endif // VTUTTE_TOOLS_CLI_HPP
