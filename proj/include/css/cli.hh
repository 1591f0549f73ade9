#ifndef CSS_GUARD_CLI_HH
#define CSS_GUARD_CLI_HH 1

#include <ostream>

namespace css
{
    inline constexpr int exit_pass = 0;
    inline constexpr int exit_violation = 1;
    inline constexpr int exit_usage = 2;

    /// Runs csslab. The run report goes to out, usage and parse diagnostics to err.
    auto run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}

#endif
