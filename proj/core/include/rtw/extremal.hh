/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_EXTREMAL_HH
#define RTW_GUARD_EXTREMAL_HH 1

#include <rtw/enumeration.hh>
#include <rtw/errors.hh>
#include <rtw/graph.hh>
#include <rtw/rainbow.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace rtw
{
    struct Budget
    {
        std::int64_t max_nodes = 100'000'000;
        double max_seconds = 900.0;
    };

    enum class SearchStatus
    {
        Optimal,
        LowerBoundOnly
    };

    auto to_string(SearchStatus s) -> std::string;

    struct SearchStats
    {
        std::int64_t nodes = 0;
        double seconds = 0.0;
        std::int64_t bound_prunes = 0;
        std::int64_t feasibility_prunes = 0;
    };

    using Certificate = std::variant<SmallGraph, RedBlueGraph, CopyFamily>;

    struct SearchOutcome
    {
        std::int64_t value = 0;
        Certificate certificate;
        SearchStatus status = SearchStatus::Optimal;
        SearchStats stats;
    };

    /// ex(n, F): most edges in an F-free graph on n vertices. Certificate is
    /// the extremal graph. Throws CapacityError for n > 11.
    auto ex_edges(int n, const SmallGraph & f, const Budget & budget = {}) -> SearchOutcome;

    /// ex(n, H, F): most copies of H in an F-free graph on n vertices.
    auto ex_generalized(int n, const SmallGraph & h, const SmallGraph & f, const Budget & budget = {}) -> SearchOutcome;

    /// ex^col(n, H, K2; F): over F-free red-blue graphs on n vertices, the
    /// most red copies of H plus blue edges. Certificate is a RedBlueGraph.
    auto ex_colored(int n, const SmallGraph & h, const SmallGraph & f, const Budget & budget = {}) -> SearchOutcome;

    struct RbOptions
    {
        /// Restrict families to copies inside this graph on n vertices
        /// instead of K_n; disables the root symmetry reduction.
        std::optional<SmallGraph> host;

        /// 0 means RTW_WORKERS from the environment, else hardware threads.
        int workers = 0;
    };

    /**
     * rb(n, H, F): the largest family of distinct H-copies on n vertices with
     * no rainbow F. Copies of H in K_n are ordered lexicographically; the
     * search includes before it excludes, keeps only candidates that can be
     * added without a rainbow F, and stops a branch once its size plus the
     * remaining candidates cannot beat the best. On K_n the first member is
     * fixed to copy 0. The certificate is the lexicographically least
     * optimal family, whatever the worker count.
     */
    auto rb_exact(int n, const SmallGraph & h, const SmallGraph & f, const Budget & budget = {},
            const RbOptions & options = {}) -> SearchOutcome;

    struct SandwichReport
    {
        SearchOutcome ex_h_f;       // ex(n, H, F)
        SearchOutcome rb;           // rb(n, H, F)
        SearchOutcome ex_col;       // ex^col(n, H, K2; F)
        SearchOutcome ex_f;         // ex(n, F)
        bool all_optimal = false;
        /// Red H-copies plus blue edges of the colouring built from the rb certificate.
        std::int64_t colouring_value = 0;
    };

    class SandwichViolation : public Error
    {
        public:
            using Error::Error;
    };

    /// Runs all four solvers and checks ex(n,H,F) <= rb <= ex^col <= ex(n,H,F) + ex(n,F).
    /// With every solver optimal, a violation throws SandwichViolation naming
    /// the certificates involved.
    auto check_sandwich(int n, const SmallGraph & h, const SmallGraph & f, const Budget & budget = {}) -> SandwichReport;

    /// RTW_WORKERS, capped by the hardware; at least 1.
    auto default_workers() -> int;
}

#endif
