/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_RAINBOW_KERNEL_HH
#define RTW_GUARD_RAINBOW_KERNEL_HH 1

#include <rtw/enumeration.hh>
#include <rtw/graph.hh>

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

namespace rtw
{
    /// Host graphs handled by the mask-based kernels: at most 64 edges.
    inline constexpr int max_kernel_edges = 64;

    /// Members of a family tracked by the kernel.
    inline constexpr int max_kernel_members = 128;

    /// Edge subsets of a fixed host, one bit per host edge.
    class EdgeIndexer
    {
        private:
            std::vector<Edge> _edges;
            std::vector<int> _position;     // by edge_index, -1 if not a host edge

        public:
            /// Throws CapacityError when the host has more than 64 edges.
            explicit EdgeIndexer(const SmallGraph & host);

            [[nodiscard]] auto edges() const -> const std::vector<Edge> &
            {
                return _edges;
            }

            [[nodiscard]] auto bit(Edge e) const -> int
            {
                return _position[edge_index(e)];
            }

            [[nodiscard]] auto mask(std::span<const Edge> edges) const -> std::uint64_t;
            [[nodiscard]] auto edges_of(std::uint64_t mask) const -> std::vector<Edge>;
    };

    /**
     * Incremental rainbow-freeness for a growing family of H-copies inside a
     * fixed host. The family is a stack of copy indices; compatible(c) says
     * whether pushing copy c keeps the family rainbow-F-free, assuming the
     * current family already is. Only F-copies sharing an edge with c are
     * re-examined, since a new rainbow has to use c.
     *
     * The tables are shared between clones, so a clone per worker is cheap.
     */
    class RainbowKernel
    {
        public:
            struct Tables
            {
                EdgeIndexer indexer;
                std::vector<Copy> h_copies;
                std::vector<std::uint64_t> h_masks;
                std::vector<std::uint64_t> f_masks;
                std::vector<std::vector<int>> touching;   // per H-copy: F-copies sharing an edge
                int f_edges = 0;
            };

        private:
            struct MemberSet
            {
                std::array<std::uint64_t, max_kernel_members / 64> words{};
            };

            std::shared_ptr<const Tables> _tables;
            std::vector<int> _members;
            std::vector<std::uint64_t> _union_stack;
            std::array<MemberSet, max_kernel_edges> _coverage{};

            [[nodiscard]] auto has_distinct_representatives(std::uint64_t f_mask, std::uint64_t candidate_mask) const -> bool;

        public:
            RainbowKernel(const SmallGraph & host, const SmallGraph & h, const SmallGraph & f);

            [[nodiscard]] auto tables() const -> const Tables &
            {
                return *_tables;
            }

            [[nodiscard]] auto copy_count() const -> int
            {
                return int(_tables->h_copies.size());
            }

            [[nodiscard]] auto members() const -> const std::vector<int> &
            {
                return _members;
            }

            [[nodiscard]] auto compatible(int candidate) const -> bool;

            /// Throws CapacityError beyond 128 members.
            auto push(int candidate) -> void;
            auto pop() -> void;
    };
}

#endif
