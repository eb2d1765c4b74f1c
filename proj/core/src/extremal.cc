/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/catalog.hh>
#include <rtw/extremal.hh>
#include <rtw/graph6.hh>
#include <rtw/rainbow_kernel.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

using std::int64_t;
using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

using std::chrono::steady_clock;

namespace rtw
{
    using std::to_string;

    namespace
    {
        inline constexpr int max_solver_order = 11;

        /// Node and wall-clock accounting shared by the workers of one call.
        class BudgetClock
        {
            private:
                Budget _budget;
                steady_clock::time_point _start = steady_clock::now();
                std::atomic<int64_t> _nodes{ 0 };
                std::atomic<bool> _exhausted{ false };

            public:
                explicit BudgetClock(const Budget & budget) :
                    _budget(budget)
                {
                    if (budget.max_nodes <= 0 || budget.max_seconds <= 0)
                        throw InvalidArgument("budget limits must be positive");
                }

                /// Counts a node; false once the budget is gone.
                auto tick() -> bool
                {
                    if (_exhausted.load(std::memory_order_relaxed))
                        return false;
                    auto count = _nodes.fetch_add(1, std::memory_order_relaxed) + 1;
                    if (count > _budget.max_nodes || ((count & 255) == 0 && elapsed() > _budget.max_seconds)) {
                        _exhausted.store(true, std::memory_order_relaxed);
                        return false;
                    }
                    return true;
                }

                [[nodiscard]] auto exhausted() const -> bool
                {
                    return _exhausted.load(std::memory_order_relaxed);
                }

                [[nodiscard]] auto elapsed() const -> double
                {
                    return std::chrono::duration<double>(steady_clock::now() - _start).count();
                }

                [[nodiscard]] auto nodes() const -> int64_t
                {
                    return _nodes.load();
                }

                auto fill(SearchStats & stats) const -> void
                {
                    stats.nodes = nodes();
                    stats.seconds = elapsed();
                }
        };

        auto check_order(int n) -> void
        {
            if (n < 0)
                throw InvalidArgument("negative vertex count");
            if (n > max_solver_order)
                throw CapacityError("exact solvers handle at most " + to_string(max_solver_order)
                        + " vertices, got " + to_string(n));
        }

        auto require_edges(const SmallGraph & g, const char * what) -> void
        {
            if (g.size() == 0)
                throw InvalidArgument(string(what) + " must have at least one edge");
        }

        auto complete_graph(int n) -> SmallGraph
        {
            if (n == 0)
                return SmallGraph(0);
            return make_named(CatalogSpec{ GraphKind::Clique, n });
        }

        auto finish(int64_t value, Certificate certificate, const BudgetClock & clock, SearchStats stats) -> SearchOutcome
        {
            clock.fill(stats);
            return SearchOutcome{ value, std::move(certificate),
                clock.exhausted() ? SearchStatus::LowerBoundOnly : SearchStatus::Optimal, stats };
        }

        [[noreturn]] auto certificate_failure(const string & what) -> void
        {
            throw std::logic_error("certificate re-verification failed: " + what);
        }

        /// Include-first DFS over the edges of K_n in lexicographic order,
        /// never adding an edge that completes a copy of F.
        class FFreeGraphSearch
        {
            private:
                const SmallGraph & _f;
                vector<Edge> _edges;
                BudgetClock & _clock;
                SearchStats & _stats;

            public:
                FFreeGraphSearch(int n, const SmallGraph & f, BudgetClock & clock, SearchStats & stats) :
                    _f(f),
                    _edges(complete_graph(n).edges()),
                    _clock(clock),
                    _stats(stats)
                {
                }

                [[nodiscard]] auto edges() const -> const vector<Edge> &
                {
                    return _edges;
                }

                /// Hooks: `node(g, i, state)` returns false to prune the subtree,
                /// `include(g, e, state)` yields the child state when e is added,
                /// `leaf(g, excluded)` sees every completed graph.
                template <typename State, typename Node, typename Include, typename Leaf>
                auto run(SmallGraph & g, std::size_t i, const State & state, uint64_t chosen_out,
                        Node & node, Include & include, Leaf & leaf) -> void
                {
                    if (! _clock.tick())
                        return;
                    if (! node(g, i, state)) {
                        ++_stats.bound_prunes;
                        return;
                    }
                    if (i == _edges.size()) {
                        leaf(g, chosen_out);
                        return;
                    }

                    auto e = _edges[i];
                    g.add_edge(e);
                    if (! contains_copy_through(g, _f, e)) {
                        State child = include(g, e, state);
                        run(g, i + 1, child, chosen_out, node, include, leaf);
                        g.clear_edge(e.u, e.v);
                        run(g, i + 1, state, chosen_out | (uint64_t{ 1 } << i), node, include, leaf);
                    }
                    else {
                        ++_stats.feasibility_prunes;
                        g.clear_edge(e.u, e.v);
                        run(g, i + 1, state, chosen_out, node, include, leaf);
                    }
                }

                /// No edge excluded by choice can be added back without creating F.
                auto maximal(SmallGraph & g, uint64_t chosen_out) const -> bool
                {
                    for ( ; chosen_out ; chosen_out &= chosen_out - 1) {
                        auto e = _edges[std::countr_zero(chosen_out)];
                        g.add_edge(e);
                        bool creates = contains_copy_through(g, _f, e);
                        g.clear_edge(e.u, e.v);
                        if (! creates)
                            return false;
                    }
                    return true;
                }
        };

        auto with_remaining(const SmallGraph & g, const vector<Edge> & edges, std::size_t from) -> SmallGraph
        {
            SmallGraph result = g;
            for (std::size_t j = from ; j < edges.size() ; ++j)
                result.add_edge(edges[j]);
            return result;
        }

        /// Best colouring of one graph: red copies of h plus blue edges.
        auto best_colouring(const SmallGraph & g, const SmallGraph & h, int64_t floor,
                RedBlueGraph & best_graph) -> int64_t
        {
            EdgeIndexer indexer(g);
            auto & edges = indexer.edges();
            vector<uint64_t> copies;
            for (auto & c : enumerate_copies(g, h))
                copies.push_back(indexer.mask(c.edges()));

            uint64_t useful = 0;
            for (auto m : copies)
                useful |= m;

            // hosts here have at most 55 edges
            uint64_t all = (uint64_t{ 1 } << edges.size()) - 1;
            int64_t best = floor;
            uint64_t best_red = 0;
            bool found = false;

            auto red_copies = [&] (uint64_t red) {
                int64_t count = 0;
                for (auto m : copies)
                    count += (m & ~red) == 0;
                return count;
            };

            auto dfs = [&] (auto & self, std::size_t j, uint64_t red, int64_t blue) -> void {
                uint64_t undecided = all & ~((uint64_t{ 1 } << j) - 1);
                int64_t bound = red_copies(red | undecided) + blue + std::popcount(undecided);
                if (bound <= best)
                    return;
                if (j == edges.size()) {
                    best = red_copies(red) + blue;
                    best_red = red;
                    found = true;
                    return;
                }
                // edges in no copy of h are blue in some optimum
                if ((useful >> j) & 1u)
                    self(self, j + 1, red | (uint64_t{ 1 } << j), blue);
                self(self, j + 1, red, blue + 1);
            };
            dfs(dfs, 0, 0, 0);

            if (found) {
                best_graph = RedBlueGraph(g.order());
                for (std::size_t j = 0 ; j < edges.size() ; ++j)
                    best_graph.set_colour(edges[j], ((best_red >> j) & 1u) ? Colour::Red : Colour::Blue);
            }
            return best;
        }

        auto family_from(const RainbowKernel & kernel, int n, const SmallGraph & h, const vector<int> & indices) -> CopyFamily
        {
            CopyFamily family{ n, h, {}, false };
            for (int i : indices)
                family.copies.push_back(kernel.tables().h_copies[i]);
            return family;
        }

        auto family_summary(const CopyFamily & family) -> string
        {
            std::ostringstream s;
            s << family.copies.size() << " copies:";
            for (auto & c : family.copies) {
                s << " [";
                for (std::size_t i = 0 ; i < c.edges().size() ; ++i)
                    s << (i ? " " : "") << to_string(c.edges()[i]);
                s << "]";
            }
            return s.str();
        }
    }

    auto to_string(SearchStatus s) -> string
    {
        return s == SearchStatus::Optimal ? "optimal" : "lower_bound_only";
    }

    auto default_workers() -> int
    {
        int hardware = std::max(1u, std::thread::hardware_concurrency());
        if (const char * env = std::getenv("RTW_WORKERS")) {
            int requested = std::atoi(env);
            if (requested >= 1)
                return std::min(requested, hardware);
        }
        return hardware;
    }

    auto ex_edges(int n, const SmallGraph & f, const Budget & budget) -> SearchOutcome
    {
        check_order(n);
        require_edges(f, "forbidden graph");

        BudgetClock clock(budget);
        SearchStats stats;
        FFreeGraphSearch search(n, f, clock, stats);
        auto total = int64_t(search.edges().size());

        int64_t best = -1;
        SmallGraph best_graph(n);

        auto node = [&] (const SmallGraph & g, std::size_t i, int64_t count) {
            if (count > best) {
                best = count;
                best_graph = g;
            }
            if (i == std::size_t(total))
                return true;
            return count + (total - int64_t(i)) > best;
        };
        auto include = [] (const SmallGraph &, Edge, int64_t count) { return count + 1; };
        auto leaf = [] (const SmallGraph &, uint64_t) { };

        SmallGraph g(n);
        search.run(g, 0, int64_t{ 0 }, 0, node, include, leaf);

        if (best_graph.size() != best || (best_graph.size() > 0 && contains_copy(best_graph, f)))
            certificate_failure("ex certificate");
        return finish(best, best_graph, clock, stats);
    }

    auto ex_generalized(int n, const SmallGraph & h, const SmallGraph & f, const Budget & budget) -> SearchOutcome
    {
        check_order(n);
        require_edges(h, "counted graph");
        require_edges(f, "forbidden graph");

        BudgetClock clock(budget);
        SearchStats stats;
        FFreeGraphSearch search(n, f, clock, stats);
        auto & edges = search.edges();

        int64_t best = -1;
        SmallGraph best_graph(n);

        auto node = [&] (const SmallGraph & g, std::size_t i, int64_t count) {
            if (count > best) {
                best = count;
                best_graph = g;
            }
            if (i == edges.size())
                return true;
            // counts only grow with edges: everything still undecided is an upper bound
            return count_copies(with_remaining(g, edges, i), h) > best;
        };
        auto include = [&] (const SmallGraph & g, Edge e, int64_t count) {
            return count + count_copies_through(g, h, e);
        };
        auto leaf = [] (const SmallGraph &, uint64_t) { };

        SmallGraph g(n);
        search.run(g, 0, int64_t{ 0 }, 0, node, include, leaf);

        if (count_copies(best_graph, h) != best || contains_copy(best_graph, f))
            certificate_failure("generalized ex certificate");
        return finish(best, best_graph, clock, stats);
    }

    auto ex_colored(int n, const SmallGraph & h, const SmallGraph & f, const Budget & budget) -> SearchOutcome
    {
        check_order(n);
        require_edges(h, "counted graph");
        require_edges(f, "forbidden graph");

        BudgetClock clock(budget);
        SearchStats stats;
        FFreeGraphSearch search(n, f, clock, stats);
        auto & edges = search.edges();

        int64_t best = 0;
        RedBlueGraph best_graph(n);

        auto node = [&] (const SmallGraph & g, std::size_t i, int64_t edge_count) {
            if (i == edges.size())
                return true;
            auto full = with_remaining(g, edges, i);
            return count_copies(full, h) + edge_count + int64_t(edges.size() - i) > best;
        };
        auto include = [] (const SmallGraph &, Edge, int64_t edge_count) { return edge_count + 1; };
        auto leaf = [&] (const SmallGraph & g, uint64_t chosen_out) {
            // every objective here grows with edges, so only maximal graphs matter
            SmallGraph scratch = g;
            if (! search.maximal(scratch, chosen_out))
                return;
            if (count_copies(g, h) + g.size() <= best)
                return;
            RedBlueGraph candidate;
            auto value = best_colouring(g, h, best, candidate);
            if (value > best) {
                best = value;
                best_graph = candidate;
            }
        };

        SmallGraph g(n);
        search.run(g, 0, int64_t{ 0 }, 0, node, include, leaf);

        auto whole = best_graph.graph();
        if (count_colored(best_graph, h, make_named(CatalogSpec{ GraphKind::Clique, 2 })) != best
                || (whole.size() > 0 && contains_copy(whole, f)))
            certificate_failure("colored ex certificate");
        return finish(best, best_graph, clock, stats);
    }

    auto rb_exact(int n, const SmallGraph & h, const SmallGraph & f, const Budget & budget,
            const RbOptions & options) -> SearchOutcome
    {
        check_order(n);
        require_edges(h, "family pattern");
        require_edges(f, "rainbow target");

        SmallGraph host = options.host ? *options.host : complete_graph(n);
        if (host.order() != n)
            throw InvalidArgument("host has " + to_string(host.order()) + " vertices, expected " + to_string(n));
        bool symmetric = ! options.host.has_value();

        BudgetClock clock(budget);
        SearchStats stats;
        RainbowKernel root(host, h, f);
        int copies = root.copy_count();

        vector<int> root_members;
        vector<int> root_candidates;
        if (copies > 0) {
            if (symmetric) {
                // every copy of H in K_n is in one orbit: an optimum contains copy 0
                if (root.compatible(0)) {
                    root.push(0);
                    root_members.push_back(0);
                    for (int d = 1 ; d < copies ; ++d)
                        if (root.compatible(d))
                            root_candidates.push_back(d);
                }
            }
            else
                for (int d = 0 ; d < copies ; ++d)
                    if (root.compatible(d))
                        root_candidates.push_back(d);
        }

        int root_size = int(root_members.size());
        std::atomic<int> shared_best{ root_size };

        struct BranchResult
        {
            int best = -1;
            vector<int> members;
            SearchStats stats;
        };
        vector<BranchResult> results(root_candidates.size());

        auto dfs = [&] (auto & self, RainbowKernel & kernel, const vector<int> & candidates,
                BranchResult & result) -> void {
            if (! clock.tick())
                return;
            int size = int(kernel.members().size());
            if (size > result.best) {
                result.best = size;
                result.members = kernel.members();
                int seen = shared_best.load();
                while (size > seen && ! shared_best.compare_exchange_weak(seen, size))
                    ;
            }

            for (std::size_t idx = 0 ; idx < candidates.size() ; ++idx) {
                int bound = size + int(candidates.size() - idx);
                if (bound <= result.best || bound < shared_best.load(std::memory_order_relaxed)) {
                    ++result.stats.bound_prunes;
                    break;
                }

                kernel.push(candidates[idx]);
                vector<int> next;
                next.reserve(candidates.size() - idx);
                for (std::size_t j = idx + 1 ; j < candidates.size() ; ++j) {
                    if (kernel.compatible(candidates[j]))
                        next.push_back(candidates[j]);
                    else
                        ++result.stats.feasibility_prunes;
                }
                self(self, kernel, next, result);
                kernel.pop();

                if (clock.exhausted())
                    return;
            }
        };

        auto run_branch = [&] (RainbowKernel & kernel, std::size_t idx) {
            auto & result = results[idx];
            result.best = root_size;
            int bound = root_size + int(root_candidates.size() - idx);
            if (bound < shared_best.load()) {
                ++result.stats.bound_prunes;
                return;
            }
            kernel.push(root_candidates[idx]);
            vector<int> next;
            for (std::size_t j = idx + 1 ; j < root_candidates.size() ; ++j) {
                if (kernel.compatible(root_candidates[j]))
                    next.push_back(root_candidates[j]);
                else
                    ++result.stats.feasibility_prunes;
            }
            dfs(dfs, kernel, next, result);
            kernel.pop();
        };

        int workers = options.workers > 0 ? options.workers : default_workers();
        workers = std::max(1, std::min<int>(workers, int(root_candidates.size())));

        if (workers <= 1) {
            for (std::size_t idx = 0 ; idx < root_candidates.size() && ! clock.exhausted() ; ++idx)
                run_branch(root, idx);
        }
        else {
            std::atomic<std::size_t> next_branch{ 0 };
            vector<std::thread> threads;
            for (int w = 0 ; w < workers ; ++w)
                threads.emplace_back([&, kernel = root] () mutable {
                    for (std::size_t idx ; (idx = next_branch.fetch_add(1)) < root_candidates.size() ; ) {
                        if (clock.exhausted())
                            break;
                        run_branch(kernel, idx);
                    }
                });
            for (auto & t : threads)
                t.join();
        }

        int value = root_size;
        vector<int> members = root_members;
        for (auto & r : results) {
            stats.bound_prunes += r.stats.bound_prunes;
            stats.feasibility_prunes += r.stats.feasibility_prunes;
            if (r.best > value) {
                value = r.best;
                members = r.members;
            }
        }

        auto family = family_from(root, n, h, members);
        if (int(family.copies.size()) != value || find_rainbow(family, f))
            certificate_failure("rb certificate " + family_summary(family));
        return finish(value, family, clock, stats);
    }

    auto check_sandwich(int n, const SmallGraph & h, const SmallGraph & f, const Budget & budget) -> SandwichReport
    {
        SandwichReport report{
            ex_generalized(n, h, f, budget),
            rb_exact(n, h, f, budget),
            ex_colored(n, h, f, budget),
            ex_edges(n, f, budget),
            false,
            0
        };

        report.all_optimal = report.ex_h_f.status == SearchStatus::Optimal
            && report.rb.status == SearchStatus::Optimal
            && report.ex_col.status == SearchStatus::Optimal
            && report.ex_f.status == SearchStatus::Optimal;

        auto & family = std::get<CopyFamily>(report.rb.certificate);
        auto colouring = colouring_from_family(family);
        report.colouring_value = count_colored(colouring, h, make_named(CatalogSpec{ GraphKind::Clique, 2 }));
        auto colouring_graph = colouring.graph();
        bool colouring_f_free = colouring_graph.size() == 0 || ! contains_copy(colouring_graph, f);

        std::ostringstream problems;
        auto e1 = report.ex_h_f.value, r = report.rb.value, c = report.ex_col.value, e2 = report.ex_f.value;
        if (report.all_optimal) {
            if (e1 > r)
                problems << " ex(n,H,F)=" << e1 << " > rb=" << r;
            if (r > c)
                problems << " rb=" << r << " > ex^col=" << c;
            if (c > e1 + e2)
                problems << " ex^col=" << c << " > ex(n,H,F)+ex(n,F)=" << e1 + e2;
        }
        if (report.colouring_value < r || ! colouring_f_free)
            problems << " colouring from the rb family gives " << report.colouring_value
                << (colouring_f_free ? "" : " and contains F");

        if (! problems.str().empty()) {
            std::ostringstream message;
            message << "sandwich violated at n=" << n << ":" << problems.str()
                << "; ex(n,H,F) certificate " << emit_graph6(std::get<SmallGraph>(report.ex_h_f.certificate))
                << ", rb certificate " << family_summary(family)
                << ", ex^col certificate red " << emit_graph6(std::get<RedBlueGraph>(report.ex_col.certificate).red())
                << " blue " << emit_graph6(std::get<RedBlueGraph>(report.ex_col.certificate).blue())
                << ", ex(n,F) certificate " << emit_graph6(std::get<SmallGraph>(report.ex_f.certificate));
            throw SandwichViolation(message.str());
        }

        return report;
    }
}
