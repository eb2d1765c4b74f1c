/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_MATCHING_HH
#define RTW_GUARD_MATCHING_HH 1

#include <rtw/errors.hh>

#include <optional>
#include <vector>

namespace rtw
{
    /// Bipartite graph with sides A = {0..left-1} and B = {0..right-1};
    /// adjacency lists run from A to B.
    struct BipartiteGraph
    {
        int left = 0;
        int right = 0;
        std::vector<std::vector<int>> adjacency;

        BipartiteGraph() = default;
        BipartiteGraph(int left_size, int right_size);

        auto add_edge(int a, int b) -> void;
        [[nodiscard]] auto adjacent(int a, int b) const -> bool;
    };

    /// Partner in B of each A-vertex, or -1.
    using Matching = std::vector<int>;

    inline constexpr int unmatched = -1;

    /// Maximum matching by repeated augmentation, trying A-vertices and their
    /// neighbours in increasing order, so the result is deterministic.
    auto maximum_matching(const BipartiteGraph & g) -> Matching;

    /// Checks that m is a matching of g (injective, along edges).
    auto is_matching(const BipartiteGraph & g, const Matching & m) -> bool;

    /// An augmenting path a0, b0, a1, b1, ..., bk (A and B vertices
    /// alternating, a0 and bk unmatched), if one exists.
    auto find_augmenting_path(const BipartiteGraph & g, const Matching & m) -> std::optional<std::vector<int>>;

    struct BipartitePartition
    {
        std::vector<int> a1, a2, b1, b2;
    };

    class NotMaximumMatching : public Error
    {
        private:
            std::vector<int> _path;

        public:
            explicit NotMaximumMatching(std::vector<int> path);

            [[nodiscard]] auto path() const -> const std::vector<int> &
            {
                return _path;
            }
    };

    /**
     * Splits A into A1, A2 and the matched part of B into B1, B2 such that
     * M(a) is in B1 for every a in A1, and every neighbour of A2 lies in B2.
     *
     * B2 is the set of matched B-vertices reachable by an alternating path
     * from an unmatched A-vertex, A2 the unmatched A-vertices together with
     * the partners of B2. All four lists are sorted.
     *
     * Throws NotMaximumMatching (carrying the path) if m admits an
     * augmenting path, and InvalidArgument if m is not a matching of g.
     */
    auto matching_decomposition(const BipartiteGraph & g, const Matching & m) -> BipartitePartition;

    /// Verifies the three partition properties and |A1| = |B1|.
    auto check_partition(const BipartiteGraph & g, const Matching & m, const BipartitePartition & p) -> bool;
}

#endif
