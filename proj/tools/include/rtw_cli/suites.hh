/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_RTW_CLI_SUITES_HH
#define RTW_GUARD_RTW_CLI_SUITES_HH 1

#include <cstdint>
#include <string>
#include <vector>

namespace rtw::cli
{
    struct SuiteReport
    {
        std::string name;
        std::uint64_t seed = 0;
        int trials = 0;
        int violations = 0;
        /// Smallest failing input found, empty when nothing failed.
        std::string counterexample;
        std::vector<std::string> notes;
    };

    /// Sandwich chain on {K3,P4,P3,M2,C4}^2 at n = 4, 5 (50 instances); fewer
    /// trials take a seeded sample.
    auto sandwich_suite(std::uint64_t seed, int trials = 50) -> SuiteReport;

    /// Random bipartite graphs with sides up to 12: maximum matching, then
    /// the decomposition invariants.
    auto decomposition_suite(std::uint64_t seed, int trials = 1000) -> SuiteReport;

    /// Random triangle families in K6: Berge containment against rainbow
    /// containment for K3, P4 and C4.
    auto berge_suite(std::uint64_t seed, int trials = 200) -> SuiteReport;

    /// Random families: subfamilies of rainbow-free families stay free,
    /// witnesses survive adding members, incremental and full checks agree.
    auto monotone_suite(std::uint64_t seed, int trials = 200) -> SuiteReport;

    /// Families built so every edge of a target f-copy has at least |E(F)|
    /// members: greedy assignment must succeed. Also counts random cases
    /// where greedy fails but a matching succeeds.
    auto greedy_suite(std::uint64_t seed, int trials = 1000) -> SuiteReport;

    auto run_suite(const std::string & name, std::uint64_t seed, int trials) -> SuiteReport;
    auto suite_names() -> std::vector<std::string>;
}

#endif
