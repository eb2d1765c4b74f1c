/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_CONSTRUCTIONS_HH
#define RTW_GUARD_CONSTRUCTIONS_HH 1

#include <rtw/enumeration.hh>
#include <rtw/rainbow.hh>

#include <cstdint>
#include <vector>

namespace rtw
{
    /// A generated family with its closed-form size and its verified
    /// rainbow status against the target.
    struct ConstructionReport
    {
        CopyFamily family;
        std::int64_t claimed_size = 0;
        bool rainbow_free = false;
        SmallGraph f_target;
    };

    /// Recomputes size and rainbow status with independent calls; true when
    /// the report's fields agree with them.
    auto recheck(const ConstructionReport & report) -> bool;

    /// Paths a-b-c_i-d with a = 0, b = 1, d = 2, c_i = i + 2 for i = 1..n-3.
    /// n - 3 copies of P4, no rainbow P4. Needs 4 <= n <= 32.
    auto p4_construction(int n) -> ConstructionReport;

    /**
     * ⌊n/4k⌋ blocks j of 2k vertices, u_i^j = 2kj + i - 1 and
     * v_i^j = 2kj + k + i - 1, followed by n - 2k⌊n/4k⌋ vertices w_l. Each
     * (j, l) contributes the cycle w_l u_k^j ... u_1^j v_1^j ... v_k^j w_l.
     * Pattern and target are C_{2k+1}. Needs k >= 1 and 4k + 1 <= n <= 32.
     */
    auto odd_cycle_construction(int n, int k) -> ConstructionReport;

    struct BlowupReport
    {
        ConstructionReport report;
        /// 0/1 side per host vertex after the local-search cut.
        std::vector<int> host_side;
        int host_edges = 0;
        int cut_edges = 0;
        /// Part sizes of f: side 0 has `s` vertices, side 1 has `t`.
        int s = 0, t = 0;
        /// Every non-adjacent pair of distinct vertices of f has a common neighbour.
        bool hypothesis_holds = false;
    };

    /**
     * Splits the F-free host by local-search max-cut (start from evens versus
     * odds, move a vertex while it has more neighbours on its own side),
     * replaces each side-0 host vertex by s clones and each side-1 vertex by
     * t clones, and places one copy of f on the clone blocks of every cut
     * edge. Host vertex x owns a consecutive block of clones, in host order.
     * The family lives on |V(host)|·|V(f)| vertices; unused ones stay isolated.
     * Throws InvalidArgument if f is not bipartite or the host contains f,
     * CapacityError when |V(host)|·|V(f)| exceeds 32.
     */
    auto blowup_construction(const SmallGraph & f, const SmallGraph & host) -> BlowupReport;

    /**
     * Rootlet pairs u_i = 2i, v_i = 2i + 1 for i < ⌊n/4⌋, then pages
     * w_1..w_{t-1} and x_j for j <= n - 2⌊n/4⌋ - t + 1; one B_t with rootlets
     * u_i, v_i and pages w_1..w_{t-1}, x_j for every (i, j). Verified against
     * B_r. Needs t >= 2, r >= t, n <= 32 and both counts positive.
     */
    auto book_construction(int n, int t, int r) -> ConstructionReport;

    /// Blue K_{⌊n/2⌋,⌈n/2⌉} on parts [0, ⌊n/2⌋) and [⌊n/2⌋, n), plus a red
    /// edge between the two lowest vertices of the second part. Needs n >= 4.
    auto c4_f2_colored_construction(int n) -> RedBlueGraph;

    /// The three perfect matchings of K4 on {0,1,2,3} as M2-copies on n
    /// vertices. Needs 4 <= n <= 32.
    auto m2_construction(int n) -> ConstructionReport;

    /// Does every non-adjacent pair of distinct vertices share a neighbour?
    auto identified_pairs_share_neighbour(const SmallGraph & f) -> bool;
}

#endif
