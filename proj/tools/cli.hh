#ifndef ZSIG_TOOLS_CLI_HH
#define ZSIG_TOOLS_CLI_HH

#include <iosfwd>

namespace zsig::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_failure = 1;
    inline constexpr int exit_config_error = 2;

    /// Runs the command line; output goes to out unless --out names a file.
    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}

#endif
