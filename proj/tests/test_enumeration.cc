/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include <rtw/catalog.hh>
#include <rtw/enumeration.hh>
#include <rtw/errors.hh>

#include "generators.hh"
#include "oracle.hh"

using namespace rtw;

namespace
{
    auto as_oracle(const Copy & c) -> oracle::EdgeSet
    {
        oracle::EdgeSet result;
        for (auto & e : c.edges())
            result.emplace_back(e.u, e.v);
        return result;
    }

    const char * const patterns[] = { "K2", "P3", "P4", "K3", "M2", "C4", "K1,3", "B2", "F2", "C5", "K4" };
}

TEST_SUITE("enumeration")
{
    TEST_CASE("copy keeps edges sorted and rejects repeats")
    {
        Copy c({ { 2, 3 }, { 0, 1 }, { 1, 2 } });
        CHECK(c.edges() == std::vector<Edge>{ { 0, 1 }, { 1, 2 }, { 2, 3 } });
        CHECK(c.size() == 3);
        CHECK(c.contains(Edge{ 1, 2 }));
        CHECK(! c.contains(Edge{ 0, 2 }));
        CHECK(c.vertex_bound() == 4);
        CHECK_THROWS_AS(Copy({ { 0, 1 }, { 1, 0 } }), InvalidArgument);
    }

    TEST_CASE("known copy counts")
    {
        auto k4 = oracle::complete(4);
        CHECK(enumerate_copies(k4, named_graph("P4")).size() == 12);
        CHECK(count_copies(k4, named_graph("P4")) == 12);
        CHECK(count_copies(k4, named_graph("K3")) == 4);
        CHECK(count_copies(k4, named_graph("C4")) == 3);
        CHECK(count_copies(k4, named_graph("M2")) == 3);
        CHECK(count_copies(named_graph("K2,2"), named_graph("C4")) == 1);
        CHECK(count_copies(oracle::complete(5), named_graph("P4")) == 60);
        CHECK(count_copies(oracle::complete(6), named_graph("P4")) == 180);
        CHECK(count_copies(named_graph("K3,3"), named_graph("C4")) == 9);
    }

    TEST_CASE("edgeless patterns and oversized patterns")
    {
        CHECK_THROWS_AS(enumerate_copies(oracle::complete(4), named_graph("E3")), InvalidArgument);
        CHECK(enumerate_copies(oracle::complete(3), named_graph("P4")).empty());
        CHECK(count_copies(oracle::complete(3), named_graph("K4")) == 0);
    }

    TEST_CASE("a pattern with isolated vertices counts its edge part")
    {
        auto p3_plus = disjoint_union(named_graph("P3"), SmallGraph(2));
        CHECK(count_copies(oracle::complete(6), p3_plus) == count_copies(oracle::complete(6), named_graph("P3")));
        CHECK(count_copies(oracle::complete(4), p3_plus) == 0);
    }

    TEST_CASE("enumeration agrees with the brute-force oracle on random hosts")
    {
        gen::Rng rng(0xe1);
        for (int trial = 0 ; trial < 250 ; ++trial) {
            int n = gen::uniform(rng, 2, 7);
            auto host = gen::random_graph(rng, n, 0.55);
            auto pattern = named_graph(patterns[gen::uniform(rng, 0, std::size(patterns) - 1)]);
            CAPTURE(to_string(host));
            CAPTURE(to_string(pattern));

            auto found = enumerate_copies(host, pattern);
            auto expected = oracle::copies(host, pattern);
            std::set<oracle::EdgeSet> got;
            for (auto & c : found)
                got.insert(as_oracle(c));
            CHECK(got == expected);
            CHECK(got.size() == found.size());
            CHECK(std::is_sorted(found.begin(), found.end()));
            CHECK(count_copies(host, pattern) == std::int64_t(expected.size()));
            CHECK(contains_copy(host, pattern) == ! expected.empty());

            for (auto & e : host.edges()) {
                std::int64_t through = 0;
                for (auto & c : expected)
                    through += std::find(c.begin(), c.end(), std::pair{ e.u, e.v }) != c.end();
                CHECK(count_copies_through(host, pattern, e) == through);
                CHECK(contains_copy_through(host, pattern, e) == (through > 0));
                CHECK(std::int64_t(copies_through_edge(found, e).size()) == through);
            }
        }
    }

    TEST_CASE("red-blue graphs")
    {
        RedBlueGraph g(4);
        g.set_colour(Edge{ 0, 1 }, Colour::Red);
        g.set_colour(Edge{ 1, 2 }, Colour::Blue);
        CHECK(g.colour(Edge{ 0, 1 }) == Colour::Red);
        CHECK(g.colour(Edge{ 1, 2 }) == Colour::Blue);
        CHECK(! g.colour(Edge{ 2, 3 }));
        g.set_colour(Edge{ 0, 1 }, Colour::Blue);
        CHECK(g.colour(Edge{ 0, 1 }) == Colour::Blue);
        CHECK(g.red().size() == 0);
        CHECK(g.graph().size() == 2);
    }

    TEST_CASE("coloured counts")
    {
        RedBlueGraph g(6);
        for (int a = 0 ; a < 3 ; ++a)
            for (int b = 3 ; b < 6 ; ++b)
                g.set_colour(Edge{ a, b }, Colour::Blue);
        g.set_colour(Edge{ 3, 4 }, Colour::Red);
        CHECK(count_colored(g, named_graph("C4"), named_graph("K2")) == 9);

        RedBlueGraph red_k4(4);
        for (auto & e : oracle::complete(4).edges())
            red_k4.set_colour(e, Colour::Red);
        CHECK(count_colored(red_k4, named_graph("K3"), named_graph("K2")) == 4);
        CHECK(count_colored(red_k4, named_graph("C4"), named_graph("K2")) == 3);
    }
}
