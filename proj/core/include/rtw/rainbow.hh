/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_RAINBOW_HH
#define RTW_GUARD_RAINBOW_HH 1

#include <rtw/enumeration.hh>
#include <rtw/graph.hh>

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace rtw
{
    /// A family of copies of one pattern on n_host vertices.
    struct CopyFamily
    {
        int n_host = 0;
        SmallGraph pattern;
        std::vector<Copy> copies;
        bool allow_multiplicity = false;

        auto operator== (const CopyFamily &) const -> bool = default;
    };

    /// Throws InvalidArgument describing the first violated family invariant:
    /// vertex range, isomorphism of each copy to the pattern, distinctness
    /// unless multiplicity is allowed.
    auto validate(const CopyFamily & family) -> void;

    /// Sorts the copies so that downstream results are reproducible.
    auto normalised(CopyFamily family) -> CopyFamily;

    auto union_of(const CopyFamily & family) -> SmallGraph;

    /// Number of members containing the edge.
    auto containment_count(const CopyFamily & family, Edge e) -> int;

    /// A copy of F in the union together with an injective choice of a
    /// member for each of its edges. assignment[i] is the member index for
    /// f_copy.edges()[i].
    struct RainbowWitness
    {
        Copy f_copy;
        std::vector<int> assignment;

        auto operator== (const RainbowWitness &) const -> bool = default;
    };

    /// Independent certificate check: f_copy spans a graph isomorphic to f
    /// (up to isolated vertices), the assignment is injective, and each edge
    /// lies in its assigned member.
    auto check_witness(const CopyFamily & family, const SmallGraph & f, const RainbowWitness & witness) -> bool;

    /// Injective edge-to-member assignment for this particular f-copy, if any.
    auto distinct_representatives(const CopyFamily & family, const Copy & f_copy) -> std::optional<std::vector<int>>;

    /// The rainbow copy of f using the lexicographically first f-copy of the
    /// union graph that admits one, or nothing if the family is rainbow-f-free.
    auto find_rainbow(const CopyFamily & family, const SmallGraph & f) -> std::optional<RainbowWitness>;

    /// Rainbow check after appending one member: only f-copies using an edge
    /// of the new member are examined, so the result is only meaningful when
    /// the family without it is known to be rainbow-free. Indices in the
    /// witness refer to the family with the new member last.
    auto find_rainbow_after_adding(const CopyFamily & family, const Copy & added, const SmallGraph & f) -> std::optional<RainbowWitness>;

    struct GreedyOutcome
    {
        std::optional<RainbowWitness> witness;
        /// The first edge (in sorted order) with no unused member, on failure.
        std::optional<Edge> stuck_at;
    };

    /// Assigns each edge of the f-copy, in sorted order, the lowest-index
    /// unused member containing it. Always succeeds when every edge is in at
    /// least |E(f_copy)| members. Throws InvalidArgument if an edge of the
    /// f-copy is outside the union.
    auto greedy_rainbow(const CopyFamily & family, const Copy & f_copy) -> GreedyOutcome;

    /// assignment[i] holds t distinct members for edge i; all |E|·t members distinct.
    struct MultiRainbowWitness
    {
        Copy f_copy;
        std::vector<std::vector<int>> assignment;
    };

    auto check_multi_witness(const CopyFamily & family, const SmallGraph & f, int t, const MultiRainbowWitness & witness) -> bool;

    /// t-wise rainbow: every edge of the f-copy gets t members of its own.
    /// t = 1 agrees with find_rainbow. Throws InvalidArgument for t < 1.
    auto find_t_rainbow(const CopyFamily & family, const SmallGraph & f, int t) -> std::optional<MultiRainbowWitness>;

    /// Vertex sets of the members of a clique family, as sorted r-sets in
    /// member order. Throws InvalidArgument if the pattern is not a clique.
    auto berge_view(const CopyFamily & family) -> std::vector<std::vector<int>>;

    /// Does the hypergraph on n vertices contain a Berge copy of f: an f-copy
    /// in its 2-shadow with a bijection from its edges to distinct hyperedges
    /// containing them?
    auto berge_contains(int n, std::span<const std::vector<int>> hyperedges, const SmallGraph & f) -> bool;

    struct HeavyLightSplit
    {
        int threshold = 1;
        std::vector<Edge> heavy_edges, light_edges;
        std::vector<std::array<int, 3>> heavy_triangles, light_triangles;
    };

    /// An edge or triangle of the union graph is heavy when at least
    /// `threshold` members contain it (all three edges, for a triangle).
    auto heavy_light_classify(const CopyFamily & family, int threshold) -> HeavyLightSplit;

    /**
     * Maps a family to a red-blue graph through a maximum matching between
     * members and union edges: matched edges only, colour blue when the
     * matched member cannot reach an unmatched member alternately, red
     * otherwise. For a rainbow-f-free family the result is f-free and its
     * (red family-pattern copies + blue edges) is at least the family size.
     */
    auto colouring_from_family(const CopyFamily & family) -> RedBlueGraph;
}

#endif
