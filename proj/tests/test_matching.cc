/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include <rtw/errors.hh>
#include <rtw/matching.hh>

#include "generators.hh"
#include "oracle.hh"

using namespace rtw;

using oracle::brute_matching_size;
using oracle::invariants_hold;
using oracle::matched_size;

TEST_SUITE("matching")
{
    TEST_CASE("maximum matching on small cases")
    {
        BipartiteGraph g(3, 3);
        g.add_edge(0, 0);
        g.add_edge(1, 0);
        g.add_edge(1, 1);
        g.add_edge(2, 1);
        auto m = maximum_matching(g);
        CHECK(is_matching(g, m));
        CHECK(matched_size(m) == 2);
        CHECK(! find_augmenting_path(g, m));

        BipartiteGraph empty(0, 4);
        CHECK(maximum_matching(empty).empty());
    }

    TEST_CASE("is_matching rejects non-edges and shared partners")
    {
        BipartiteGraph g(2, 2);
        g.add_edge(0, 0);
        g.add_edge(1, 0);
        CHECK(is_matching(g, { 0, unmatched }));
        CHECK(! is_matching(g, { 0, 0 }));
        CHECK(! is_matching(g, { 1, unmatched }));
        CHECK(! is_matching(g, { 0 }));
    }

    TEST_CASE("augmenting path is reported for a non-maximum matching")
    {
        BipartiteGraph g(2, 2);
        g.add_edge(0, 0);
        g.add_edge(0, 1);
        g.add_edge(1, 0);
        Matching m{ 0, unmatched };
        auto path = find_augmenting_path(g, m);
        REQUIRE(path);
        CHECK(*path == std::vector<int>{ 1, 0, 0, 1 });
        CHECK_THROWS_AS(matching_decomposition(g, m), NotMaximumMatching);
        try {
            matching_decomposition(g, m);
        }
        catch (const NotMaximumMatching & e) {
            CHECK(e.path() == *path);
        }
        CHECK_THROWS_AS(matching_decomposition(g, { 5, unmatched }), InvalidArgument);
    }

    TEST_CASE("decomposition examples")
    {
        BipartiteGraph k22(2, 2);
        for (int a = 0 ; a < 2 ; ++a)
            for (int b = 0 ; b < 2 ; ++b)
                k22.add_edge(a, b);
        auto p = matching_decomposition(k22, { 0, 1 });
        CHECK(p.a1 == std::vector<int>{ 0, 1 });
        CHECK(p.a2.empty());
        CHECK(p.b1 == std::vector<int>{ 0, 1 });
        CHECK(p.b2.empty());

        BipartiteGraph star(2, 1);
        star.add_edge(0, 0);
        star.add_edge(1, 0);
        auto q = matching_decomposition(star, { 0, unmatched });
        CHECK(q.a1.empty());
        CHECK(q.a2 == std::vector<int>{ 0, 1 });
        CHECK(q.b1.empty());
        CHECK(q.b2 == std::vector<int>{ 0 });
        CHECK(check_partition(star, { 0, unmatched }, q));
    }

    TEST_CASE("property: maximum size, no augmenting path, valid decomposition")
    {
        gen::Rng rng(0xc2);
        for (int trial = 0 ; trial < 500 ; ++trial) {
            auto g = gen::random_bipartite(rng, 8);
            auto m = maximum_matching(g);
            REQUIRE(is_matching(g, m));
            CHECK(matched_size(m) == brute_matching_size(g));
            CHECK(! find_augmenting_path(g, m));

            auto p = matching_decomposition(g, m);
            CHECK(check_partition(g, m, p));
            CHECK(invariants_hold(g, m, p));
            CHECK(p.a1.size() == p.b1.size());
        }
    }

    TEST_CASE("property: augmenting paths alternate and grow the matching")
    {
        gen::Rng rng(0xa9);
        for (int trial = 0 ; trial < 300 ; ++trial) {
            auto g = gen::random_bipartite(rng, 7);
            Matching m(g.left, unmatched);
            std::vector<bool> taken(g.right, false);
            // a random greedy matching, usually not maximum
            for (int a = 0 ; a < g.left ; ++a)
                for (int b : g.adjacency[a])
                    if (! taken[b] && gen::coin(rng, 0.5)) {
                        m[a] = b;
                        taken[b] = true;
                        break;
                    }

            for (auto path = find_augmenting_path(g, m) ; path ; path = find_augmenting_path(g, m)) {
                auto & p = *path;
                REQUIRE(p.size() % 2 == 0);
                CHECK(m[p.front()] == unmatched);
                CHECK(std::find(m.begin(), m.end(), p.back()) == m.end());
                for (std::size_t i = 0 ; i + 1 < p.size() ; i += 2)
                    CHECK(g.adjacent(p[i], p[i + 1]));
                for (std::size_t i = 2 ; i < p.size() ; i += 2)
                    CHECK(m[p[i]] == p[i - 1]);

                int before = matched_size(m);
                for (std::size_t i = 0 ; i < p.size() ; i += 2)
                    m[p[i]] = p[i + 1];
                REQUIRE(is_matching(g, m));
                CHECK(matched_size(m) == before + 1);
            }
            CHECK(matched_size(m) == brute_matching_size(g));
        }
    }
}
