/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include <rtw/catalog.hh>
#include <rtw/constructions.hh>
#include <rtw/errors.hh>
#include <rtw/extremal.hh>
#include <rtw/graph6.hh>

#include "generators.hh"
#include "oracle.hh"

using namespace rtw;

TEST_SUITE("constructions")
{
    TEST_CASE("P4 family")
    {
        for (int n = 4 ; n <= 32 ; ++n) {
            CAPTURE(n);
            auto r = p4_construction(n);
            CHECK(r.claimed_size == n - 3);
            CHECK(r.family.copies.size() == std::size_t(n - 3));
            CHECK(r.rainbow_free);
            CHECK(recheck(r));
        }
        auto r = p4_construction(6);
        CHECK(r.family.copies[0].edges() == std::vector<Edge>{ { 0, 1 }, { 1, 3 }, { 2, 3 } });
        CHECK_THROWS_AS(p4_construction(3), InvalidArgument);
        CHECK_THROWS_AS(p4_construction(100), CapacityError);
    }

    TEST_CASE("odd cycle family")
    {
        auto triangles = odd_cycle_construction(8, 1);
        CHECK(triangles.family.copies.size() == 8);
        CHECK(triangles.rainbow_free);

        auto big = odd_cycle_construction(32, 1);
        CHECK(big.claimed_size == 128);
        CHECK(big.rainbow_free);
        CHECK(recheck(big));

        auto pentagons = odd_cycle_construction(24, 2);
        CHECK(pentagons.claimed_size == 36);
        CHECK(pentagons.rainbow_free);
        CHECK_NOTHROW(validate(pentagons.family));

        for (int k = 1 ; k <= 3 ; ++k)
            for (int n = 4 * k + 1 ; n <= 20 ; ++n) {
                CAPTURE(k);
                CAPTURE(n);
                auto r = odd_cycle_construction(n, k);
                CHECK(r.claimed_size == (n / (4 * k)) * (n - 2 * k * (n / (4 * k))));
                CHECK(r.rainbow_free);
            }
        CHECK_THROWS_AS(odd_cycle_construction(4, 1), InvalidArgument);
        CHECK_THROWS_AS(odd_cycle_construction(20, 0), InvalidArgument);
    }

    TEST_CASE("book family")
    {
        auto b = book_construction(12, 2, 2);
        CHECK(b.claimed_size == 15);
        CHECK(b.rainbow_free);
        auto b3 = book_construction(12, 3, 3);
        CHECK(b3.claimed_size == 12);
        CHECK(b3.rainbow_free);

        for (int t = 2 ; t <= 4 ; ++t)
            for (int n = 4 ; n <= 32 ; ++n) {
                int q = n / 4, pages = n - 2 * q - t + 1;
                if (pages < 1) {
                    CHECK_THROWS_AS(book_construction(n, t, t), InvalidArgument);
                    continue;
                }
                CAPTURE(t);
                CAPTURE(n);
                auto r = book_construction(n, t, t);
                CHECK(r.claimed_size == q * pages);
                CHECK(std::int64_t(r.family.copies.size()) == q * pages);
            }
        CHECK_THROWS_AS(book_construction(12, 1, 2), InvalidArgument);
        CHECK_THROWS_AS(book_construction(12, 3, 2), InvalidArgument);
    }

    TEST_CASE("book family members all carry a light edge at threshold 7")
    {
        auto r = book_construction(20, 2, 2);
        auto split = heavy_light_classify(r.family, 7);
        for (auto & c : r.family.copies) {
            bool light = false;
            for (auto & e : c.edges())
                light = light || std::find(split.light_edges.begin(), split.light_edges.end(), e) != split.light_edges.end();
            CHECK(light);
        }
    }

    TEST_CASE("M2 family")
    {
        for (int n = 4 ; n <= 32 ; ++n) {
            auto r = m2_construction(n);
            CHECK(r.family.copies.size() == 3);
            CHECK(r.rainbow_free);
            CHECK(r.family.n_host == n);
        }
        auto r = m2_construction(4);
        for (std::size_t drop = 0 ; drop < 3 ; ++drop) {
            auto smaller = r.family;
            smaller.copies.erase(smaller.copies.begin() + drop);
            CHECK(! find_rainbow(smaller, named_graph("M2")));
        }
        CHECK_THROWS_AS(m2_construction(3), InvalidArgument);
    }

    TEST_CASE("C4 / F2 coloured graph")
    {
        auto g6 = c4_f2_colored_construction(6);
        CHECK(g6.blue().size() == 9);
        CHECK(g6.red().size() == 1);
        CHECK(g6.colour(Edge{ 3, 4 }) == Colour::Red);
        CHECK(count_colored(g6, named_graph("C4"), named_graph("K2")) == 9);

        auto g4 = c4_f2_colored_construction(4);
        CHECK(g4.blue().size() == 4);
        CHECK(g4.colour(Edge{ 2, 3 }) == Colour::Red);

        for (int n = 4 ; n <= 9 ; ++n)
            CHECK(! oracle::contains(c4_f2_colored_construction(n).graph(), named_graph("F2")));
        CHECK_THROWS_AS(c4_f2_colored_construction(3), InvalidArgument);
    }

    TEST_CASE("blow-up family")
    {
        auto c4_on_c5 = blowup_construction(named_graph("C4"), named_graph("C5"));
        CHECK(c4_on_c5.cut_edges == 4);
        CHECK(c4_on_c5.report.family.copies.size() >= 3);
        CHECK(c4_on_c5.report.family.n_host == 20);
        CHECK(c4_on_c5.s == 2);
        CHECK(c4_on_c5.t == 2);
        CHECK(c4_on_c5.report.rainbow_free);
        CHECK(c4_on_c5.hypothesis_holds);
        CHECK_NOTHROW(validate(c4_on_c5.report.family));

        auto p3 = blowup_construction(named_graph("P3"), named_graph("M2"));
        CHECK(p3.hypothesis_holds);
        CHECK(p3.s == 2);
        CHECK(p3.t == 1);
        CHECK(p3.report.family.copies.size() == 2);
        CHECK(p3.report.rainbow_free);

        auto m2 = blowup_construction(named_graph("M2"), named_graph("K3"));
        CHECK(! m2.hypothesis_holds);
        CHECK(recheck(m2.report));

        CHECK_THROWS_AS(blowup_construction(named_graph("K3"), named_graph("C5")), InvalidArgument);
        CHECK_THROWS_AS(blowup_construction(named_graph("C4"), named_graph("K4")), InvalidArgument);
        CHECK_THROWS_AS(blowup_construction(named_graph("C4"), named_graph("C9")), CapacityError);
    }

    TEST_CASE("property: blow-up cuts at least half of the host edges")
    {
        gen::Rng rng(0xbb);
        for (int trial = 0 ; trial < 200 ; ++trial) {
            auto host = gen::random_graph(rng, gen::uniform(rng, 2, 8), 0.4);
            auto f = named_graph("P3");
            if (oracle::contains(host, f) || host.size() == 0) {
                f = named_graph("K2,3");
                if (oracle::contains(host, f) || host.size() == 0)
                    continue;
            }
            if (host.order() * f.order() > 32)
                continue;
            auto r = blowup_construction(f, host);
            CHECK(2 * r.cut_edges >= r.host_edges);
            CHECK(std::int64_t(r.report.family.copies.size()) == r.cut_edges);
            CHECK(recheck(r.report));
            int crossing = 0;
            for (auto & e : host.edges())
                crossing += r.host_side[e.u] != r.host_side[e.v];
            CHECK(crossing == r.cut_edges);
        }
    }

    TEST_CASE("identified pairs share a neighbour")
    {
        CHECK(identified_pairs_share_neighbour(named_graph("C4")));
        CHECK(identified_pairs_share_neighbour(named_graph("P3")));
        CHECK(identified_pairs_share_neighbour(named_graph("K3")));
        CHECK(! identified_pairs_share_neighbour(named_graph("M2")));
        CHECK(! identified_pairs_share_neighbour(named_graph("P4")));
    }

    TEST_CASE("constructions against exact values")
    {
        for (int n = 5 ; n <= 6 ; ++n)
            CHECK(p4_construction(n).claimed_size == rb_exact(n, named_graph("P4"), named_graph("P4")).value);
        for (int n = 4 ; n <= 5 ; ++n)
            CHECK(m2_construction(n).claimed_size == rb_exact(n, named_graph("M2"), named_graph("M2")).value);
        for (int n = 4 ; n <= 6 ; ++n)
            CHECK(p4_construction(n).claimed_size <= rb_exact(n, named_graph("P4"), named_graph("P4")).value);
        CHECK(book_construction(6, 2, 2).claimed_size <= rb_exact(6, named_graph("B2"), named_graph("B2")).value);
        CHECK(odd_cycle_construction(5, 1).claimed_size <= rb_exact(5, named_graph("K3"), named_graph("K3")).value);
    }

    TEST_CASE("generation is deterministic")
    {
        CHECK(book_construction(16, 2, 3).family == book_construction(16, 2, 3).family);
        auto host = parse_graph6(emit_graph6(named_graph("C5")));
        CHECK(blowup_construction(named_graph("C4"), host).report.family
                == blowup_construction(named_graph("C4"), named_graph("C5")).report.family);
    }
}
