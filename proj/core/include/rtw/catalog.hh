/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_CATALOG_HH
#define RTW_GUARD_CATALOG_HH 1

#include <rtw/graph.hh>

#include <string>
#include <string_view>

namespace rtw
{
    enum class GraphKind
    {
        Path,                       // P_k, k vertices
        Cycle,                      // C_k
        Clique,                     // K_r
        CompleteBipartite,          // K_{a,b}
        Matching,                   // M_k, k disjoint edges
        Book,                       // B_t, t triangles on a common edge
        TwoTrianglesSharingVertex,  // F_2
        Turan,                      // T(n, r)
        Empty                       // n isolated vertices
    };

    struct CatalogSpec
    {
        GraphKind kind = GraphKind::Empty;
        int first = 0;
        int second = 0;

        auto operator== (const CatalogSpec &) const -> bool = default;
    };

    /**
     * Builds a named graph. Labellings:
     *
     *  - P_k: path 0-1-...-(k-1).
     *  - C_k: cycle 0-1-...-(k-1)-0.
     *  - K_{a,b}: parts {0..a-1} and {a..a+b-1}.
     *  - M_k: edges (2i, 2i+1).
     *  - B_t: rootlets 0 and 1, pages 2..t+1.
     *  - F_2: centre 0, triangles 0-1-2 and 0-3-4.
     *  - T(n,r): consecutive blocks, the first n mod r blocks one larger.
     *
     * Throws InvalidArgument on non-positive parameters and CapacityError
     * when the graph would exceed 32 vertices.
     */
    auto make_named(const CatalogSpec & spec) -> SmallGraph;

    /// Parses "P4", "C5", "K3", "K2,3", "B2", "M2", "F2", "T6,3", "E5".
    auto parse_catalog_spec(std::string_view text) -> CatalogSpec;

    auto to_string(const CatalogSpec & spec) -> std::string;

    /// parse_catalog_spec then make_named.
    auto named_graph(std::string_view text) -> SmallGraph;
}

#endif
