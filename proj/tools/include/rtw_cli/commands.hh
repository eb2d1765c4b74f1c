/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_RTW_CLI_COMMANDS_HH
#define RTW_GUARD_RTW_CLI_COMMANDS_HH 1

#include <iosfwd>

namespace rtw::cli
{
    namespace exit_code
    {
        inline constexpr int ok = 0;
        inline constexpr int usage = 1;
        inline constexpr int lower_bound_only = 2;
        inline constexpr int rainbow_found = 3;
        inline constexpr int violation = 4;
    }

    /// The whole command line: compute, construct, verify, table, check.
    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}

#endif
