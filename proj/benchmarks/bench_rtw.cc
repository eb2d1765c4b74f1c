/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/catalog.hh>
#include <rtw/constructions.hh>
#include <rtw/enumeration.hh>
#include <rtw/extremal.hh>
#include <rtw/matching.hh>
#include <rtw/rainbow.hh>

#include <benchmark/benchmark.h>

#include <random>

using namespace rtw;

namespace
{
    auto complete(int n) -> SmallGraph
    {
        SmallGraph g(n);
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b)
                g.add_edge(a, b);
        return g;
    }

    auto bench_enumerate(benchmark::State & state, const char * pattern)
    {
        auto host = complete(int(state.range(0)));
        auto p = named_graph(pattern);
        for (auto _ : state)
            benchmark::DoNotOptimize(enumerate_copies(host, p));
    }

    auto bench_verify_p4(benchmark::State & state)
    {
        auto r = p4_construction(int(state.range(0)));
        auto f = named_graph("P4");
        for (auto _ : state)
            benchmark::DoNotOptimize(find_rainbow(r.family, f));
    }

    auto bench_verify_odd_cycle(benchmark::State & state)
    {
        auto r = odd_cycle_construction(int(state.range(0)), 1);
        auto f = named_graph("K3");
        for (auto _ : state)
            benchmark::DoNotOptimize(find_rainbow(r.family, f));
    }

    auto bench_verify_book(benchmark::State & state)
    {
        auto r = book_construction(32, 2, int(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(find_rainbow(r.family, r.f_target));
    }

    auto bench_matching(benchmark::State & state)
    {
        int side = int(state.range(0));
        std::mt19937_64 rng(7);
        std::bernoulli_distribution coin(0.3);
        BipartiteGraph g(side, side);
        for (int a = 0 ; a < side ; ++a)
            for (int b = 0 ; b < side ; ++b)
                if (coin(rng))
                    g.add_edge(a, b);
        for (auto _ : state) {
            auto m = maximum_matching(g);
            benchmark::DoNotOptimize(matching_decomposition(g, m));
        }
    }

    auto bench_rb_exact(benchmark::State & state, const char * h, const char * f)
    {
        int n = int(state.range(0));
        auto hg = named_graph(h), fg = named_graph(f);
        for (auto _ : state)
            benchmark::DoNotOptimize(rb_exact(n, hg, fg));
    }
}

BENCHMARK_CAPTURE(bench_enumerate, P4, "P4")->Arg(6)->Arg(10);
BENCHMARK_CAPTURE(bench_enumerate, C4, "C4")->Arg(6)->Arg(10);
BENCHMARK(bench_verify_p4)->Arg(16)->Arg(32);
BENCHMARK(bench_verify_odd_cycle)->Arg(16)->Arg(32);
BENCHMARK(bench_verify_book)->Arg(2)->Arg(3);
BENCHMARK(bench_matching)->Arg(12)->Arg(64);
BENCHMARK_CAPTURE(bench_rb_exact, P4, "P4", "P4")->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_rb_exact, K3, "K3", "K3")->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
