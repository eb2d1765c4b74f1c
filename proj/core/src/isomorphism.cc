/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/errors.hh>
#include <rtw/isomorphism.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <numeric>

using std::optional;
using std::vector;

namespace rtw
{
    using std::to_string;

    namespace
    {
        struct IsomorphismSearch
        {
            const SmallGraph & a;
            const SmallGraph & b;
            vector<int> order;
            std::array<int, max_vertices> image{};
            std::uint32_t used = 0;

            auto extend(std::size_t depth) -> bool
            {
                if (depth == order.size())
                    return true;

                int v = order[depth];
                for (int w = 0 ; w < b.order() ; ++w) {
                    if ((used >> w) & 1u)
                        continue;
                    if (a.degree(v) != b.degree(w))
                        continue;

                    bool consistent = true;
                    for (std::size_t d = 0 ; d < depth && consistent ; ++d)
                        if (a.adjacent(v, order[d]) != b.adjacent(w, image[order[d]]))
                            consistent = false;
                    if (! consistent)
                        continue;

                    image[v] = w;
                    used |= std::uint32_t{ 1 } << w;
                    if (extend(depth + 1))
                        return true;
                    used &= ~(std::uint32_t{ 1 } << w);
                }
                return false;
            }
        };

        auto colourable(const SmallGraph & g, int k, vector<int> & colour, int v) -> bool
        {
            if (v == g.order())
                return true;
            // symmetry: vertex v never needs a colour beyond the largest used so far plus one
            int limit = 0;
            for (int w = 0 ; w < v ; ++w)
                limit = std::max(limit, colour[w] + 1);
            limit = std::min(limit + 1, k);
            for (int c = 0 ; c < limit ; ++c) {
                bool ok = true;
                for (int w = 0 ; w < v && ok ; ++w)
                    if (g.adjacent(v, w) && colour[w] == c)
                        ok = false;
                if (! ok)
                    continue;
                colour[v] = c;
                if (colourable(g, k, colour, v + 1))
                    return true;
            }
            colour[v] = -1;
            return false;
        }
    }

    auto is_isomorphic(const SmallGraph & a, const SmallGraph & b) -> bool
    {
        if (a.order() > max_isomorphism_order || b.order() > max_isomorphism_order)
            throw CapacityError("isomorphism testing supports at most "
                    + to_string(max_isomorphism_order) + " vertices");

        if (a.order() != b.order() || a.size() != b.size())
            return false;
        if (a.degree_sequence() != b.degree_sequence())
            return false;

        // high degree first, then anything adjacent to what is already placed
        IsomorphismSearch search{ a, b, {}, {}, 0 };
        vector<bool> placed(a.order(), false);
        for (int step = 0 ; step < a.order() ; ++step) {
            int best = -1, best_links = -1;
            for (int v = 0 ; v < a.order() ; ++v) {
                if (placed[v])
                    continue;
                int links = 0;
                for (int w : search.order)
                    links += a.adjacent(v, w);
                if (links > best_links || (links == best_links && a.degree(v) > a.degree(best))) {
                    best = v;
                    best_links = links;
                }
            }
            placed[best] = true;
            search.order.push_back(best);
        }

        return search.extend(0);
    }

    auto chromatic_number(const SmallGraph & g) -> int
    {
        if (g.order() > max_colouring_order)
            throw CapacityError("chromatic number supports at most "
                    + to_string(max_colouring_order) + " vertices");
        if (g.order() == 0)
            return 0;

        vector<int> colour(g.order(), -1);
        for (int k = 1 ; ; ++k)
            if (colourable(g, k, colour, 0))
                return k;
    }

    auto bipartition(const SmallGraph & g) -> optional<vector<int>>
    {
        vector<int> side(g.order(), -1);
        for (int start = 0 ; start < g.order() ; ++start) {
            if (side[start] != -1)
                continue;
            side[start] = 0;
            std::deque<int> queue{ start };
            while (! queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (int w = 0 ; w < g.order() ; ++w) {
                    if (! g.adjacent(v, w))
                        continue;
                    if (side[w] == -1) {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    }
                    else if (side[w] == side[v])
                        return std::nullopt;
                }
            }
        }
        return side;
    }
}
