/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_ENUMERATION_HH
#define RTW_GUARD_ENUMERATION_HH 1

#include <rtw/graph.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rtw
{
    /// An unlabelled copy of a pattern, identified by its edge set. Edges are
    /// kept sorted, so comparison is lexicographic on the sorted edge list.
    class Copy
    {
        private:
            std::vector<Edge> _edges;

        public:
            Copy() = default;

            /// Sorts the edges; throws InvalidArgument on a repeated edge.
            explicit Copy(std::vector<Edge> edges);

            [[nodiscard]] auto edges() const -> const std::vector<Edge> &
            {
                return _edges;
            }

            [[nodiscard]] auto size() const -> int
            {
                return int(_edges.size());
            }

            [[nodiscard]] auto contains(Edge e) const -> bool;

            /// One past the largest vertex index used.
            [[nodiscard]] auto vertex_bound() const -> int;

            auto operator<=> (const Copy &) const = default;
    };

    /// Every copy of the pattern in the host, each edge set exactly once, in
    /// lexicographic order. Empty when the pattern is larger than the host.
    /// Throws InvalidArgument for an edgeless pattern.
    auto enumerate_copies(const SmallGraph & host, const SmallGraph & pattern) -> std::vector<Copy>;

    auto count_copies(const SmallGraph & host, const SmallGraph & pattern) -> std::int64_t;

    /// Number of copies of the pattern in the host that use edge e.
    auto count_copies_through(const SmallGraph & host, const SmallGraph & pattern, Edge e) -> std::int64_t;

    /// Does the host contain the pattern as a (not necessarily induced) subgraph?
    auto contains_copy(const SmallGraph & host, const SmallGraph & pattern) -> bool;

    /// As contains_copy, restricted to copies that use edge e.
    auto contains_copy_through(const SmallGraph & host, const SmallGraph & pattern, Edge e) -> bool;

    /// Ascending indices of the copies whose edge set contains e.
    auto copies_through_edge(std::span<const Copy> copies, Edge e) -> std::vector<int>;

    enum class Colour
    {
        Red,
        Blue
    };

    /// A graph with every edge coloured red or blue, held as two
    /// edge-disjoint layers on the same vertex set.
    class RedBlueGraph
    {
        private:
            SmallGraph _red;
            SmallGraph _blue;

        public:
            RedBlueGraph() = default;
            explicit RedBlueGraph(int n);
            RedBlueGraph(SmallGraph red, SmallGraph blue);

            [[nodiscard]] auto order() const -> int
            {
                return _red.order();
            }

            [[nodiscard]] auto red() const -> const SmallGraph &
            {
                return _red;
            }

            [[nodiscard]] auto blue() const -> const SmallGraph &
            {
                return _blue;
            }

            [[nodiscard]] auto graph() const -> SmallGraph;

            [[nodiscard]] auto colour(Edge e) const -> std::optional<Colour>;

            /// Adds the edge, or recolours it if already present.
            auto set_colour(Edge e, Colour c) -> void;

            auto operator== (const RedBlueGraph &) const -> bool = default;
    };

    /// Red copies of `red_pattern` plus blue copies of `blue_pattern`.
    auto count_colored(const RedBlueGraph & g, const SmallGraph & red_pattern, const SmallGraph & blue_pattern) -> std::int64_t;
}

#endif
