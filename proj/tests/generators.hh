/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_TESTS_GENERATORS_HH
#define RTW_GUARD_TESTS_GENERATORS_HH 1

#include <rtw/enumeration.hh>
#include <rtw/graph.hh>
#include <rtw/matching.hh>
#include <rtw/rainbow.hh>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace gen
{
    using Rng = std::mt19937_64;

    inline auto uniform(Rng & rng, int lo, int hi) -> int
    {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    inline auto coin(Rng & rng, double p) -> bool
    {
        return std::bernoulli_distribution(p)(rng);
    }

    inline auto random_graph(Rng & rng, int n, double p) -> rtw::SmallGraph
    {
        rtw::SmallGraph g(n);
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b)
                if (coin(rng, p))
                    g.add_edge(a, b);
        return g;
    }

    inline auto random_bipartite(Rng & rng, int max_side) -> rtw::BipartiteGraph
    {
        int left = uniform(rng, 0, max_side), right = uniform(rng, 0, max_side);
        double p = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
        rtw::BipartiteGraph g(left, right);
        for (int a = 0 ; a < left ; ++a)
            for (int b = 0 ; b < right ; ++b)
                if (coin(rng, p))
                    g.add_edge(a, b);
        return g;
    }

    /// A random copy of `pattern` in K_n via a random injective placement.
    inline auto random_copy(Rng & rng, int n, const rtw::SmallGraph & pattern) -> rtw::Copy
    {
        std::vector<int> perm(n);
        for (int i = 0 ; i < n ; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<rtw::Edge> edges;
        for (auto & e : pattern.edges())
            edges.push_back(rtw::make_edge(perm[e.u], perm[e.v]));
        return rtw::Copy(std::move(edges));
    }

    /// A random copy of `pattern` whose image contains the edge `through`.
    inline auto random_copy_through(Rng & rng, int n, const rtw::SmallGraph & pattern, rtw::Edge through) -> rtw::Copy
    {
        auto pattern_edges = pattern.edges();
        auto anchor = pattern_edges[uniform(rng, 0, int(pattern_edges.size()) - 1)];
        bool flip = coin(rng, 0.5);

        std::vector<int> image(pattern.order(), -1), rest;
        image[anchor.u] = flip ? through.v : through.u;
        image[anchor.v] = flip ? through.u : through.v;
        for (int x = 0 ; x < n ; ++x)
            if (x != through.u && x != through.v)
                rest.push_back(x);
        std::shuffle(rest.begin(), rest.end(), rng);
        for (int v = 0, next = 0 ; v < pattern.order() ; ++v)
            if (image[v] == -1)
                image[v] = rest[next++];

        std::vector<rtw::Edge> edges;
        for (auto & e : pattern_edges)
            edges.push_back(rtw::make_edge(image[e.u], image[e.v]));
        return rtw::Copy(std::move(edges));
    }

    /// Up to `size` distinct random copies of `pattern` in K_n.
    inline auto random_family(Rng & rng, int n, const rtw::SmallGraph & pattern, int size) -> rtw::CopyFamily
    {
        rtw::CopyFamily family{ n, pattern, {}, false };
        std::set<rtw::Copy> seen;
        for (int attempt = 0 ; attempt < 20 * size && int(family.copies.size()) < size ; ++attempt) {
            auto c = random_copy(rng, n, pattern);
            if (seen.insert(c).second)
                family.copies.push_back(c);
        }
        return family;
    }
}

#endif
