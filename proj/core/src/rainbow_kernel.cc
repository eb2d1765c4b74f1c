/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/errors.hh>
#include <rtw/rainbow_kernel.hh>

#include <bit>

using std::uint64_t;
using std::vector;

namespace rtw
{
    EdgeIndexer::EdgeIndexer(const SmallGraph & host) :
        _edges(host.edges()),
        _position(max_edges, -1)
    {
        if (_edges.size() > std::size_t(max_kernel_edges))
            throw CapacityError("search kernels handle hosts with at most 64 edges, got "
                    + std::to_string(_edges.size()));
        for (std::size_t i = 0 ; i < _edges.size() ; ++i)
            _position[edge_index(_edges[i])] = int(i);
    }

    auto EdgeIndexer::mask(std::span<const Edge> edges) const -> uint64_t
    {
        uint64_t result = 0;
        for (auto & e : edges) {
            int b = bit(e);
            if (b < 0)
                throw InvalidArgument("edge " + to_string(e) + " is not in the host");
            result |= uint64_t{ 1 } << b;
        }
        return result;
    }

    auto EdgeIndexer::edges_of(uint64_t mask) const -> vector<Edge>
    {
        vector<Edge> result;
        for ( ; mask ; mask &= mask - 1)
            result.push_back(_edges[std::countr_zero(mask)]);
        return result;
    }

    RainbowKernel::RainbowKernel(const SmallGraph & host, const SmallGraph & h, const SmallGraph & f)
    {
        auto tables = std::make_shared<Tables>(Tables{ EdgeIndexer(host), enumerate_copies(host, h), {}, {}, {}, f.size() });
        for (auto & c : tables->h_copies)
            tables->h_masks.push_back(tables->indexer.mask(c.edges()));
        for (auto & c : enumerate_copies(host, f))
            tables->f_masks.push_back(tables->indexer.mask(c.edges()));

        tables->touching.resize(tables->h_masks.size());
        for (std::size_t i = 0 ; i < tables->h_masks.size() ; ++i)
            for (std::size_t j = 0 ; j < tables->f_masks.size() ; ++j)
                if (tables->h_masks[i] & tables->f_masks[j])
                    tables->touching[i].push_back(int(j));

        _tables = std::move(tables);
        _union_stack.push_back(0);
    }

    auto RainbowKernel::has_distinct_representatives(uint64_t f_mask, uint64_t candidate_mask) const -> bool
    {
        constexpr int words = max_kernel_members / 64;
        int k = _tables->f_edges;
        int fresh = int(_members.size());

        // candidate sets per f-edge, the new member sitting at position `fresh`
        std::array<MemberSet, max_kernel_edges> sets;
        bool plenty = true;
        int i = 0;
        for (uint64_t m = f_mask ; m ; m &= m - 1, ++i) {
            int b = std::countr_zero(m);
            sets[i] = _coverage[b];
            if ((candidate_mask >> b) & 1u)
                sets[i].words[fresh / 64] |= uint64_t{ 1 } << (fresh % 64);
            int size = 0;
            for (auto w : sets[i].words)
                size += std::popcount(w);
            if (size < k)
                plenty = false;
        }

        // every edge has at least |E(F)| members: picking greedily always works
        if (plenty)
            return true;

        // augmenting paths; assigned[j] is the member held by f-edge j
        std::array<int, max_kernel_edges> assigned;
        assigned.fill(-1);

        auto owner_of = [&] (int member) {
            for (int j = 0 ; j < k ; ++j)
                if (assigned[j] == member)
                    return j;
            return -1;
        };

        MemberSet visited;
        auto augment = [&] (auto & self, int edge) -> bool {
            for (int w = 0 ; w < words ; ++w)
                for (uint64_t avail = sets[edge].words[w] & ~visited.words[w] ; avail ; avail &= avail - 1) {
                    int member = w * 64 + std::countr_zero(avail);
                    visited.words[w] |= uint64_t{ 1 } << (member % 64);
                    int owner = owner_of(member);
                    if (owner == -1 || self(self, owner)) {
                        assigned[edge] = member;
                        return true;
                    }
                }
            return false;
        };

        for (int edge = 0 ; edge < k ; ++edge) {
            visited = MemberSet{};
            if (! augment(augment, edge))
                return false;
        }
        return true;
    }

    auto RainbowKernel::compatible(int candidate) const -> bool
    {
        auto & tables = *_tables;
        uint64_t candidate_mask = tables.h_masks[candidate];
        uint64_t grown = _union_stack.back() | candidate_mask;

        if (int(_members.size()) + 1 < tables.f_edges)
            return true;

        for (int j : tables.touching[candidate]) {
            uint64_t f_mask = tables.f_masks[j];
            if (f_mask & ~grown)
                continue;
            if (has_distinct_representatives(f_mask, candidate_mask))
                return false;
        }
        return true;
    }

    auto RainbowKernel::push(int candidate) -> void
    {
        int position = int(_members.size());
        if (position >= max_kernel_members)
            throw CapacityError("search kernel tracks at most 128 family members");

        uint64_t mask = _tables->h_masks[candidate];
        for (uint64_t m = mask ; m ; m &= m - 1)
            _coverage[std::countr_zero(m)].words[position / 64] |= uint64_t{ 1 } << (position % 64);
        _members.push_back(candidate);
        _union_stack.push_back(_union_stack.back() | mask);
    }

    auto RainbowKernel::pop() -> void
    {
        int position = int(_members.size()) - 1;
        uint64_t mask = _tables->h_masks[_members.back()];
        for (uint64_t m = mask ; m ; m &= m - 1)
            _coverage[std::countr_zero(m)].words[position / 64] &= ~(uint64_t{ 1 } << (position % 64));
        _members.pop_back();
        _union_stack.pop_back();
    }
}
