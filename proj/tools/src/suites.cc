/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/catalog.hh>
#include <rtw/errors.hh>
#include <rtw/extremal.hh>
#include <rtw/matching.hh>
#include <rtw/rainbow.hh>
#include <rtw_cli/document.hh>
#include <rtw_cli/suites.hh>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

using std::string;
using std::uint64_t;
using std::vector;

namespace rtw::cli
{
    namespace
    {
        using Rng = std::mt19937_64;

        auto uniform(Rng & rng, int lo, int hi) -> int
        {
            return std::uniform_int_distribution<int>(lo, hi)(rng);
        }

        auto random_copy(Rng & rng, int n, const SmallGraph & pattern, std::optional<Edge> through = std::nullopt) -> Copy
        {
            vector<int> image(pattern.order(), -1), rest;
            auto edges = pattern.edges();
            if (through) {
                auto anchor = edges[uniform(rng, 0, int(edges.size()) - 1)];
                bool flip = uniform(rng, 0, 1);
                image[anchor.u] = flip ? through->v : through->u;
                image[anchor.v] = flip ? through->u : through->v;
            }
            for (int x = 0 ; x < n ; ++x)
                if (std::find(image.begin(), image.end(), x) == image.end())
                    rest.push_back(x);
            std::shuffle(rest.begin(), rest.end(), rng);
            for (int v = 0, next = 0 ; v < pattern.order() ; ++v)
                if (image[v] == -1)
                    image[v] = rest[next++];

            vector<Edge> mapped;
            for (auto & e : edges)
                mapped.push_back(make_edge(image[e.u], image[e.v]));
            return Copy(std::move(mapped));
        }

        auto random_family(Rng & rng, int n, const SmallGraph & pattern, int size) -> CopyFamily
        {
            CopyFamily family{ n, pattern, {}, false };
            std::set<Copy> seen;
            for (int attempt = 0 ; attempt < 20 * size && int(family.copies.size()) < size ; ++attempt) {
                auto c = random_copy(rng, n, pattern);
                if (seen.insert(c).second)
                    family.copies.push_back(c);
            }
            return family;
        }

        /// Drops members one at a time while the family still fails.
        auto shrink(CopyFamily family, const std::function<bool (const CopyFamily &)> & fails) -> CopyFamily
        {
            for (bool changed = true ; changed ; ) {
                changed = false;
                for (std::size_t i = 0 ; i < family.copies.size() ; ++i) {
                    auto smaller = family;
                    smaller.copies.erase(smaller.copies.begin() + i);
                    if (fails(smaller)) {
                        family = std::move(smaller);
                        changed = true;
                        break;
                    }
                }
            }
            return family;
        }

        auto record(SuiteReport & report, const string & counterexample) -> void
        {
            if (report.violations++ == 0)
                report.counterexample = counterexample;
        }

        auto start(const string & name, uint64_t seed) -> SuiteReport
        {
            SuiteReport report;
            report.name = name;
            report.seed = seed;
            return report;
        }

        const char * const small_patterns[] = { "K3", "P4", "P3", "M2", "C4" };
    }

    auto sandwich_suite(uint64_t seed, int trials) -> SuiteReport
    {
        auto report = start("sandwich", seed);
        struct Instance { int n; const char * h; const char * f; };
        vector<Instance> instances;
        for (int n : { 4, 5 })
            for (auto h : small_patterns)
                for (auto f : small_patterns)
                    instances.push_back({ n, h, f });
        if (trials > 0 && trials < int(instances.size())) {
            Rng rng(seed);
            std::shuffle(instances.begin(), instances.end(), rng);
            instances.resize(trials);
        }

        int not_optimal = 0;
        for (auto & [n, h, f] : instances) {
            ++report.trials;
            string label = "n=" + std::to_string(n) + " H=" + h + " F=" + f;
            try {
                auto r = check_sandwich(n, named_graph(h), named_graph(f));
                if (! r.all_optimal)
                    ++not_optimal;
                else if (r.colouring_value < r.rb.value)
                    record(report, label + ": colouring from the rb certificate scores "
                            + std::to_string(r.colouring_value) + " < rb " + std::to_string(r.rb.value));
            }
            catch (const SandwichViolation & e) {
                record(report, label + ": " + e.what());
            }
        }
        if (not_optimal)
            report.notes.push_back(std::to_string(not_optimal) + " instances ran out of budget and were not compared");
        return report;
    }

    auto decomposition_suite(uint64_t seed, int trials) -> SuiteReport
    {
        auto report = start("decomposition", seed);
        Rng rng(seed);

        auto fails = [] (const BipartiteGraph & g) {
            try {
                auto m = maximum_matching(g);
                return ! check_partition(g, m, matching_decomposition(g, m));
            }
            catch (const Error &) {
                return true;
            }
        };

        auto describe = [] (const BipartiteGraph & g) {
            string s = "left=" + std::to_string(g.left) + " right=" + std::to_string(g.right) + " edges:";
            for (int a = 0 ; a < g.left ; ++a)
                for (int b : g.adjacency[a])
                    s += " " + std::to_string(a) + "-" + std::to_string(b);
            return s;
        };

        for (int trial = 0 ; trial < trials ; ++trial) {
            ++report.trials;
            int left = uniform(rng, 0, 12), right = uniform(rng, 0, 12);
            double p = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
            BipartiteGraph g(left, right);
            for (int a = 0 ; a < left ; ++a)
                for (int b = 0 ; b < right ; ++b)
                    if (std::bernoulli_distribution(p)(rng))
                        g.add_edge(a, b);
            if (! fails(g))
                continue;

            // shrink by deleting edges while the failure persists
            for (bool changed = true ; changed ; ) {
                changed = false;
                for (int a = 0 ; a < g.left && ! changed ; ++a)
                    for (std::size_t i = 0 ; i < g.adjacency[a].size() && ! changed ; ++i) {
                        auto smaller = g;
                        smaller.adjacency[a].erase(smaller.adjacency[a].begin() + i);
                        if (fails(smaller)) {
                            g = std::move(smaller);
                            changed = true;
                        }
                    }
            }
            record(report, describe(g));
        }
        return report;
    }

    auto berge_suite(uint64_t seed, int trials) -> SuiteReport
    {
        auto report = start("berge", seed);
        Rng rng(seed);
        auto k3 = named_graph("K3");

        for (int trial = 0 ; trial < trials ; ++trial) {
            ++report.trials;
            auto family = random_family(rng, 6, k3, uniform(rng, 1, 10));
            for (auto name : { "K3", "P4", "C4" }) {
                auto f = named_graph(name);
                auto disagree = [&] (const CopyFamily & fam) {
                    auto hyperedges = berge_view(fam);
                    return berge_contains(fam.n_host, hyperedges, f) != find_rainbow(fam, f).has_value();
                };
                if (disagree(family))
                    record(report, string("F=") + name + "\n" + emit_family_document(shrink(family, disagree)));
            }
        }
        return report;
    }

    auto monotone_suite(uint64_t seed, int trials) -> SuiteReport
    {
        auto report = start("monotone", seed);
        Rng rng(seed);

        for (int trial = 0 ; trial < trials ; ++trial) {
            ++report.trials;
            int n = uniform(rng, 4, 6);
            auto h = named_graph(small_patterns[uniform(rng, 0, 4)]);
            auto f = named_graph(small_patterns[uniform(rng, 0, 4)]);
            auto family = random_family(rng, n, h, uniform(rng, 1, 6));
            string label = "H=" + to_string(h) + " F=" + to_string(f) + "\n";

            auto witness = find_rainbow(family, f);
            if (! witness) {
                auto sub_has_rainbow = [&] (const CopyFamily & fam) {
                    for (std::size_t i = 0 ; i < fam.copies.size() ; ++i) {
                        auto smaller = fam;
                        smaller.copies.erase(smaller.copies.begin() + i);
                        if (find_rainbow(smaller, f))
                            return true;
                    }
                    return false;
                };
                if (sub_has_rainbow(family))
                    record(report, label + "rainbow-free family with a rainbow subfamily\n"
                            + emit_family_document(shrink(family, sub_has_rainbow)));
                continue;
            }

            if (! check_witness(family, f, *witness)) {
                record(report, label + "invalid witness\n" + emit_family_document(family));
                continue;
            }

            auto bigger = family;
            std::set<Copy> seen(bigger.copies.begin(), bigger.copies.end());
            for (int extra = 0 ; extra < 3 ; ++extra) {
                auto c = random_copy(rng, n, h);
                if (seen.insert(c).second)
                    bigger.copies.push_back(c);
            }
            if (! check_witness(bigger, f, *witness) || ! find_rainbow(bigger, f))
                record(report, label + "witness lost after adding members\n" + emit_family_document(bigger));

            // the last member whose removal leaves the family free must be caught incrementally
            for (std::size_t i = 0 ; i < family.copies.size() ; ++i) {
                auto without = family;
                auto added = without.copies[i];
                without.copies.erase(without.copies.begin() + i);
                if (find_rainbow(without, f))
                    continue;
                if (! find_rainbow_after_adding(without, added, f))
                    record(report, label + "incremental check missed a rainbow\n" + emit_family_document(family));
                break;
            }
        }
        return report;
    }

    auto greedy_suite(uint64_t seed, int trials) -> SuiteReport
    {
        auto report = start("greedy", seed);
        Rng rng(seed);
        int order_sensitive = 0, redrawn = 0;

        for (int trial = 0 ; trial < trials ; ++trial) {
            ++report.trials;
            int n;
            SmallGraph h, f;
            Copy f_copy;
            CopyFamily family;

            // redraw until every edge of the f-copy reaches |E(F)| members
            for (bool covered = false ; ! covered ; ) {
                n = uniform(rng, 5, 8);
                h = named_graph(small_patterns[uniform(rng, 0, 4)]);
                f = named_graph(small_patterns[uniform(rng, 0, 4)]);
                f_copy = random_copy(rng, n, f);
                family = CopyFamily{ n, h, {}, false };
                std::set<Copy> seen;
                covered = true;
                for (auto & e : f_copy.edges()) {
                    for (int attempt = 0 ; attempt < 1000 && containment_count(family, e) < f.size() ; ++attempt) {
                        auto c = random_copy(rng, n, h, e);
                        if (seen.insert(c).second)
                            family.copies.push_back(c);
                    }
                    covered = covered && containment_count(family, e) >= f.size();
                }
                if (! covered)
                    ++redrawn;
            }

            std::shuffle(family.copies.begin(), family.copies.end(), rng);
            auto outcome = greedy_rainbow(family, f_copy);
            if (! outcome.witness || ! check_witness(family, f, *outcome.witness))
                record(report, "H=" + to_string(h) + " F=" + to_string(f) + " f-copy " + to_string(spanned_graph(f_copy.edges()))
                        + "\n" + emit_family_document(family));

            // a sparser random family of the same shape, for order sensitivity
            auto sparse = random_family(rng, n, h, uniform(rng, 2, 4));
            auto u = union_of(sparse);
            bool all_in = std::all_of(f_copy.edges().begin(), f_copy.edges().end(), [&] (const Edge & e) { return u.has_edge(e); });
            if (all_in && ! greedy_rainbow(sparse, f_copy).witness && distinct_representatives(sparse, f_copy))
                ++order_sensitive;
        }
        if (redrawn)
            report.notes.push_back(std::to_string(redrawn) + " draws redrawn: too few copies of H through some edge to reach |E(F)|");
        report.notes.push_back(std::to_string(order_sensitive) + " random cases where greedy failed and matching succeeded");
        return report;
    }

    auto suite_names() -> vector<string>
    {
        return { "sandwich", "decomposition", "berge", "monotone", "greedy" };
    }

    auto run_suite(const string & name, uint64_t seed, int trials) -> SuiteReport
    {
        if (name == "sandwich")
            return trials > 0 ? sandwich_suite(seed, trials) : sandwich_suite(seed);
        if (name == "decomposition")
            return trials > 0 ? decomposition_suite(seed, trials) : decomposition_suite(seed);
        if (name == "berge")
            return trials > 0 ? berge_suite(seed, trials) : berge_suite(seed);
        if (name == "monotone")
            return trials > 0 ? monotone_suite(seed, trials) : monotone_suite(seed);
        if (name == "greedy")
            return trials > 0 ? greedy_suite(seed, trials) : greedy_suite(seed);
        throw InvalidArgument("unknown suite \"" + name + "\"");
    }
}
