/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_GRAPH_HH
#define RTW_GUARD_GRAPH_HH 1

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rtw
{
    /// Hard vertex cap: one adjacency row fits in a machine word.
    inline constexpr int max_vertices = 32;

    /// Number of distinct unordered pairs on max_vertices vertices.
    inline constexpr int max_edges = max_vertices * (max_vertices - 1) / 2;

    /// An unordered vertex pair, always stored low vertex first.
    struct Edge
    {
        int u = 0;
        int v = 0;

        auto operator<=> (const Edge &) const = default;
    };

    /// Normalises the pair so that u < v. Throws InvalidArgument on a loop
    /// or a negative index.
    auto make_edge(int a, int b) -> Edge;

    /// Position of the edge in the lexicographic list of all pairs on
    /// max_vertices vertices. Lexicographic on edges means increasing here.
    auto edge_index(Edge e) -> int;

    auto to_string(Edge e) -> std::string;

    /// Undirected simple graph on at most 32 vertices, stored as bit rows.
    class SmallGraph
    {
        private:
            int _order = 0;
            std::array<std::uint32_t, max_vertices> _rows{};

        public:
            SmallGraph() = default;

            /// Empty graph on n vertices. Throws CapacityError for n > 32.
            explicit SmallGraph(int n);

            SmallGraph(int n, std::span<const Edge> edges);

            [[nodiscard]] auto order() const -> int
            {
                return _order;
            }

            /// Edge count.
            [[nodiscard]] auto size() const -> int;

            [[nodiscard]] auto adjacent(int a, int b) const -> bool
            {
                return (_rows[a] >> b) & 1u;
            }

            [[nodiscard]] auto neighbours(int a) const -> std::uint32_t
            {
                return _rows[a];
            }

            [[nodiscard]] auto degree(int a) const -> int;

            /// Bit mask with one bit per vertex of the graph.
            [[nodiscard]] auto vertex_mask() const -> std::uint32_t;

            auto add_edge(int a, int b) -> void;
            auto add_edge(Edge e) -> void
            {
                add_edge(e.u, e.v);
            }

            auto clear_edge(int a, int b) -> void;

            [[nodiscard]] auto has_edge(Edge e) const -> bool
            {
                return adjacent(e.u, e.v);
            }

            /// All edges in lexicographic order.
            [[nodiscard]] auto edges() const -> std::vector<Edge>;

            [[nodiscard]] auto degree_sequence() const -> std::vector<int>;

            auto operator== (const SmallGraph &) const -> bool = default;
    };

    auto remove_edge(const SmallGraph & g, int u, int v) -> SmallGraph;

    auto union_graph(std::span<const std::vector<Edge>> edge_sets, int n) -> SmallGraph;

    /// The graph spanned by an edge set, vertices relabelled 0..k-1 in
    /// increasing order of their original index.
    auto spanned_graph(std::span<const Edge> edges) -> SmallGraph;

    /// The graph with isolated vertices deleted, relabelled compactly.
    auto without_isolated(const SmallGraph & g) -> SmallGraph;

    /// Disjoint union: the vertices of b are shifted past those of a.
    auto disjoint_union(const SmallGraph & a, const SmallGraph & b) -> SmallGraph;

    auto to_string(const SmallGraph & g) -> std::string;
}

#endif
