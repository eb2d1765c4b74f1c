/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/catalog.hh>
#include <rtw/constructions.hh>
#include <rtw/errors.hh>
#include <rtw/isomorphism.hh>

#include <bit>

using std::int64_t;
using std::vector;

namespace rtw
{
    using std::to_string;

    using std::to_string;

    namespace
    {
        auto require_host_size(int n) -> void
        {
            if (n > max_vertices)
                throw CapacityError("construction needs " + to_string(n) + " vertices, cap is "
                        + to_string(max_vertices));
        }

        auto path_copy(std::initializer_list<int> vertices) -> Copy
        {
            vector<Edge> edges;
            auto it = vertices.begin();
            for (auto prev = *it++ ; it != vertices.end() ; prev = *it++)
                edges.push_back(make_edge(prev, *it));
            return Copy(std::move(edges));
        }

        auto finish(CopyFamily family, int64_t claimed, SmallGraph target) -> ConstructionReport
        {
            family = normalised(std::move(family));
            bool free = ! find_rainbow(family, target).has_value();
            return ConstructionReport{ std::move(family), claimed, free, std::move(target) };
        }
    }

    auto recheck(const ConstructionReport & report) -> bool
    {
        validate(report.family);
        bool free = ! find_rainbow(report.family, report.f_target).has_value();
        return int64_t(report.family.copies.size()) == report.claimed_size && free == report.rainbow_free;
    }

    auto p4_construction(int n) -> ConstructionReport
    {
        if (n < 4)
            throw InvalidArgument("P4 construction needs n >= 4");
        require_host_size(n);

        auto p4 = make_named(CatalogSpec{ GraphKind::Path, 4 });
        CopyFamily family{ n, p4, {}, false };
        const int a = 0, b = 1, d = 2;
        for (int i = 1 ; i <= n - 3 ; ++i)
            family.copies.push_back(path_copy({ a, b, i + 2, d }));

        return finish(std::move(family), n - 3, p4);
    }

    auto odd_cycle_construction(int n, int k) -> ConstructionReport
    {
        if (k < 1)
            throw InvalidArgument("odd cycle construction needs k >= 1");
        if (n < 4 * k + 1)
            throw InvalidArgument("odd cycle construction needs n >= 4k + 1");
        require_host_size(n);

        int blocks = n / (4 * k);
        int outside = n - 2 * k * blocks;
        auto cycle = make_named(CatalogSpec{ GraphKind::Cycle, 2 * k + 1 });

        CopyFamily family{ n, cycle, {}, false };
        for (int j = 0 ; j < blocks ; ++j)
            for (int l = 0 ; l < outside ; ++l) {
                auto u = [&] (int i) { return 2 * k * j + i - 1; };
                auto v = [&] (int i) { return 2 * k * j + k + i - 1; };
                int w = 2 * k * blocks + l;

                vector<Edge> edges;
                edges.push_back(make_edge(w, u(k)));
                for (int i = k ; i > 1 ; --i)
                    edges.push_back(make_edge(u(i), u(i - 1)));
                edges.push_back(make_edge(u(1), v(1)));
                for (int i = 1 ; i < k ; ++i)
                    edges.push_back(make_edge(v(i), v(i + 1)));
                edges.push_back(make_edge(v(k), w));
                family.copies.emplace_back(std::move(edges));
            }

        return finish(std::move(family), int64_t(blocks) * outside, cycle);
    }

    auto identified_pairs_share_neighbour(const SmallGraph & f) -> bool
    {
        for (int a = 0 ; a < f.order() ; ++a)
            for (int b = a + 1 ; b < f.order() ; ++b)
                if (! f.adjacent(a, b) && (f.neighbours(a) & f.neighbours(b)) == 0)
                    return false;
        return true;
    }

    auto blowup_construction(const SmallGraph & f, const SmallGraph & host) -> BlowupReport
    {
        if (f.size() == 0)
            throw InvalidArgument("blow-up pattern must have an edge");
        auto f_sides = bipartition(f);
        if (! f_sides)
            throw InvalidArgument("blow-up pattern must be bipartite");
        if (contains_copy(host, f))
            throw InvalidArgument("blow-up host must be free of the pattern");

        BlowupReport result;
        for (int side : *f_sides)
            (side == 0 ? result.s : result.t) += 1;
        result.host_edges = host.size();
        result.hypothesis_holds = identified_pairs_share_neighbour(f);

        // local search max-cut from evens versus odds
        vector<int> side(host.order());
        for (int x = 0 ; x < host.order() ; ++x)
            side[x] = x % 2;
        for (bool moved = true ; moved ; ) {
            moved = false;
            for (int x = 0 ; x < host.order() && ! moved ; ++x) {
                int same = 0, cross = 0;
                for (int y = 0 ; y < host.order() ; ++y)
                    if (host.adjacent(x, y))
                        (side[y] == side[x] ? same : cross) += 1;
                if (same > cross) {
                    side[x] = 1 - side[x];
                    moved = true;
                }
            }
        }
        result.host_side = side;

        require_host_size(host.order() * f.order());
        vector<int> block_start(host.order());
        for (int x = 0, next = 0 ; x < host.order() ; ++x) {
            block_start[x] = next;
            next += side[x] == 0 ? result.s : result.t;
        }

        // f's side-0 vertices in index order go to the side-0 clones, likewise side 1
        vector<int> rank(f.order());
        int seen[2] = { 0, 0 };
        for (int v = 0 ; v < f.order() ; ++v)
            rank[v] = seen[(*f_sides)[v]]++;

        CopyFamily family{ host.order() * f.order(), f, {}, false };
        for (auto & e : host.edges()) {
            if (side[e.u] == side[e.v])
                continue;
            ++result.cut_edges;
            int x0 = side[e.u] == 0 ? e.u : e.v, x1 = side[e.u] == 0 ? e.v : e.u;
            auto place = [&] (int v) {
                return (*f_sides)[v] == 0 ? block_start[x0] + rank[v] : block_start[x1] + rank[v];
            };
            vector<Edge> edges;
            for (auto & fe : f.edges())
                edges.push_back(make_edge(place(fe.u), place(fe.v)));
            family.copies.emplace_back(std::move(edges));
        }

        result.report = finish(std::move(family), result.cut_edges, f);
        return result;
    }

    auto book_construction(int n, int t, int r) -> ConstructionReport
    {
        if (t < 2)
            throw InvalidArgument("book construction needs t >= 2");
        if (r < t)
            throw InvalidArgument("book construction target needs r >= t");
        require_host_size(n);

        int pairs = n / 4;
        int extra_pages = n - 2 * pairs - t + 1;
        if (pairs < 1 || extra_pages < 1)
            throw InvalidArgument("book construction needs n/4 >= 1 and n - 2(n/4) - t + 1 >= 1");

        auto book = make_named(CatalogSpec{ GraphKind::Book, t });
        CopyFamily family{ n, book, {}, false };

        int first_w = 2 * pairs, first_x = first_w + t - 1;
        for (int i = 0 ; i < pairs ; ++i)
            for (int j = 0 ; j < extra_pages ; ++j) {
                int u = 2 * i, v = 2 * i + 1;
                vector<Edge> edges{ make_edge(u, v) };
                auto add_page = [&] (int p) {
                    edges.push_back(make_edge(u, p));
                    edges.push_back(make_edge(v, p));
                };
                for (int w = first_w ; w < first_x ; ++w)
                    add_page(w);
                add_page(first_x + j);
                family.copies.emplace_back(std::move(edges));
            }

        return finish(std::move(family), int64_t(pairs) * extra_pages, make_named(CatalogSpec{ GraphKind::Book, r }));
    }

    auto c4_f2_colored_construction(int n) -> RedBlueGraph
    {
        if (n < 4)
            throw InvalidArgument("C4/F2 construction needs n >= 4");
        require_host_size(n);

        int half = n / 2;
        RedBlueGraph g(n);
        for (int a = 0 ; a < half ; ++a)
            for (int b = half ; b < n ; ++b)
                g.set_colour(Edge{ a, b }, Colour::Blue);
        g.set_colour(Edge{ half, half + 1 }, Colour::Red);
        return g;
    }

    auto m2_construction(int n) -> ConstructionReport
    {
        if (n < 4)
            throw InvalidArgument("M2 construction needs n >= 4");
        require_host_size(n);

        auto m2 = make_named(CatalogSpec{ GraphKind::Matching, 2 });
        CopyFamily family{ n, m2, {}, false };
        family.copies.emplace_back(vector<Edge>{ { 0, 1 }, { 2, 3 } });
        family.copies.emplace_back(vector<Edge>{ { 0, 2 }, { 1, 3 } });
        family.copies.emplace_back(vector<Edge>{ { 0, 3 }, { 1, 2 } });
        return finish(std::move(family), 3, m2);
    }
}
