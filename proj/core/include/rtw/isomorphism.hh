/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_ISOMORPHISM_HH
#define RTW_GUARD_ISOMORPHISM_HH 1

#include <rtw/graph.hh>

#include <optional>
#include <vector>

namespace rtw
{
    inline constexpr int max_isomorphism_order = 10;
    inline constexpr int max_colouring_order = 16;

    /// Exact test by permutation search with degree pruning. Throws
    /// CapacityError above 10 vertices.
    auto is_isomorphic(const SmallGraph & a, const SmallGraph & b) -> bool;

    /// Smallest k admitting a proper k-colouring. Throws CapacityError above
    /// 16 vertices.
    auto chromatic_number(const SmallGraph & g) -> int;

    /// A proper 2-colouring (0/1 per vertex, lowest vertex of each component
    /// gets 0), or nothing if the graph has an odd cycle.
    auto bipartition(const SmallGraph & g) -> std::optional<std::vector<int>>;
}

#endif
