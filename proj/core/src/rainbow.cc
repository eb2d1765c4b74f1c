/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/errors.hh>
#include <rtw/isomorphism.hh>
#include <rtw/matching.hh>
#include <rtw/rainbow.hh>

#include <algorithm>
#include <set>

using std::optional;
using std::vector;

namespace rtw
{
    using std::to_string;

    namespace
    {
        /// Member indices per edge, indexed by edge_index.
        auto coverage_table(std::span<const Copy> copies) -> vector<vector<int>>
        {
            vector<vector<int>> table(max_edges);
            for (std::size_t i = 0 ; i < copies.size() ; ++i)
                for (auto & e : copies[i].edges())
                    table[edge_index(e)].push_back(int(i));
            return table;
        }

        auto greedy_assign(const Copy & f_copy, const vector<vector<int>> & table,
                vector<int> & assignment) -> optional<Edge>
        {
            assignment.clear();
            for (auto & e : f_copy.edges()) {
                int chosen = -1;
                for (int member : table[edge_index(e)])
                    if (std::find(assignment.begin(), assignment.end(), member) == assignment.end()) {
                        chosen = member;
                        break;
                    }
                if (chosen == -1)
                    return e;
                assignment.push_back(chosen);
            }
            return std::nullopt;
        }

        /// Each edge of the f-copy is split into `slots` left vertices.
        auto slot_matching(const Copy & f_copy, const vector<vector<int>> & table, int members, int slots)
            -> optional<vector<int>>
        {
            int k = f_copy.size();
            BipartiteGraph gamma(k * slots, members);
            for (int i = 0 ; i < k ; ++i)
                for (int member : table[edge_index(f_copy.edges()[i])])
                    for (int s = 0 ; s < slots ; ++s)
                        gamma.add_edge(i * slots + s, member);

            auto m = maximum_matching(gamma);
            if (std::count(m.begin(), m.end(), unmatched) != 0)
                return std::nullopt;
            return m;
        }

        auto sdr(const Copy & f_copy, const vector<vector<int>> & table, int members) -> optional<vector<int>>
        {
            int k = f_copy.size();
            bool plenty = true;
            for (auto & e : f_copy.edges())
                if (int(table[edge_index(e)].size()) < k) {
                    plenty = false;
                    break;
                }

            // every edge covered at least |E| times: greedy cannot get stuck
            if (plenty) {
                vector<int> assignment;
                greedy_assign(f_copy, table, assignment);
                return assignment;
            }

            return slot_matching(f_copy, table, members, 1);
        }

        auto is_clique(const SmallGraph & g) -> bool
        {
            return g.size() == g.order() * (g.order() - 1) / 2;
        }
    }

    auto validate(const CopyFamily & family) -> void
    {
        if (family.n_host < 0 || family.n_host > max_vertices)
            throw CapacityError("family host size " + to_string(family.n_host) + " outside 0.."
                    + to_string(max_vertices));
        if (family.pattern.size() == 0)
            throw InvalidArgument("family pattern has no edges");
        if (family.pattern.order() > family.n_host && ! family.copies.empty())
            throw InvalidArgument("pattern has more vertices than the host");

        auto core = without_isolated(family.pattern);
        for (std::size_t i = 0 ; i < family.copies.size() ; ++i) {
            auto & copy = family.copies[i];
            if (copy.vertex_bound() > family.n_host)
                throw InvalidArgument("copy " + to_string(i) + " uses a vertex outside the host");
            if (copy.size() != family.pattern.size() || ! is_isomorphic(spanned_graph(copy.edges()), core))
                throw InvalidArgument("copy " + to_string(i) + " is not isomorphic to the pattern");
        }

        if (! family.allow_multiplicity) {
            std::set<Copy> seen;
            for (std::size_t i = 0 ; i < family.copies.size() ; ++i)
                if (! seen.insert(family.copies[i]).second)
                    throw InvalidArgument("copy " + to_string(i) + " repeats an earlier copy and multiplicity is off");
        }
    }

    auto normalised(CopyFamily family) -> CopyFamily
    {
        std::sort(family.copies.begin(), family.copies.end());
        return family;
    }

    auto union_of(const CopyFamily & family) -> SmallGraph
    {
        SmallGraph result(family.n_host);
        for (auto & copy : family.copies)
            for (auto & e : copy.edges())
                result.add_edge(e);
        return result;
    }

    auto containment_count(const CopyFamily & family, Edge e) -> int
    {
        int count = 0;
        for (auto & copy : family.copies)
            count += copy.contains(e);
        return count;
    }

    auto check_witness(const CopyFamily & family, const SmallGraph & f, const RainbowWitness & witness) -> bool
    {
        auto & edges = witness.f_copy.edges();
        if (edges.empty() || edges.size() != witness.assignment.size() || int(edges.size()) != f.size())
            return false;
        if (! is_isomorphic(spanned_graph(edges), without_isolated(f)))
            return false;
        if (witness.f_copy.vertex_bound() > family.n_host || f.order() > family.n_host)
            return false;

        vector<int> used = witness.assignment;
        std::sort(used.begin(), used.end());
        if (std::adjacent_find(used.begin(), used.end()) != used.end())
            return false;

        for (std::size_t i = 0 ; i < edges.size() ; ++i) {
            int member = witness.assignment[i];
            if (member < 0 || member >= int(family.copies.size()))
                return false;
            if (! family.copies[member].contains(edges[i]))
                return false;
        }
        return true;
    }

    auto distinct_representatives(const CopyFamily & family, const Copy & f_copy) -> optional<vector<int>>
    {
        auto table = coverage_table(family.copies);
        return sdr(f_copy, table, int(family.copies.size()));
    }

    auto find_rainbow(const CopyFamily & family, const SmallGraph & f) -> optional<RainbowWitness>
    {
        if (f.size() == 0)
            throw InvalidArgument("target graph must have at least one edge");
        if (int(family.copies.size()) < f.size())
            return std::nullopt;

        auto table = coverage_table(family.copies);
        for (auto & f_copy : enumerate_copies(union_of(family), f))
            if (auto assignment = sdr(f_copy, table, int(family.copies.size())))
                return RainbowWitness{ f_copy, std::move(*assignment) };

        return std::nullopt;
    }

    auto find_rainbow_after_adding(const CopyFamily & family, const Copy & added, const SmallGraph & f) -> optional<RainbowWitness>
    {
        if (f.size() == 0)
            throw InvalidArgument("target graph must have at least one edge");

        CopyFamily extended = family;
        extended.copies.push_back(added);
        if (int(extended.copies.size()) < f.size())
            return std::nullopt;

        auto table = coverage_table(extended.copies);
        for (auto & f_copy : enumerate_copies(union_of(extended), f)) {
            bool touches = std::any_of(added.edges().begin(), added.edges().end(),
                    [&] (const Edge & e) { return f_copy.contains(e); });
            if (! touches)
                continue;
            if (auto assignment = sdr(f_copy, table, int(extended.copies.size())))
                return RainbowWitness{ f_copy, std::move(*assignment) };
        }
        return std::nullopt;
    }

    auto greedy_rainbow(const CopyFamily & family, const Copy & f_copy) -> GreedyOutcome
    {
        auto table = coverage_table(family.copies);
        for (auto & e : f_copy.edges())
            if (table[edge_index(e)].empty())
                throw InvalidArgument("edge " + to_string(e) + " of the f-copy is not in any member");

        vector<int> assignment;
        if (auto stuck = greedy_assign(f_copy, table, assignment))
            return GreedyOutcome{ std::nullopt, stuck };
        return GreedyOutcome{ RainbowWitness{ f_copy, std::move(assignment) }, std::nullopt };
    }

    auto check_multi_witness(const CopyFamily & family, const SmallGraph & f, int t, const MultiRainbowWitness & witness) -> bool
    {
        auto & edges = witness.f_copy.edges();
        if (edges.empty() || edges.size() != witness.assignment.size() || int(edges.size()) != f.size())
            return false;
        if (! is_isomorphic(spanned_graph(edges), without_isolated(f)))
            return false;

        vector<int> used;
        for (std::size_t i = 0 ; i < edges.size() ; ++i) {
            if (int(witness.assignment[i].size()) != t)
                return false;
            for (int member : witness.assignment[i]) {
                if (member < 0 || member >= int(family.copies.size()) || ! family.copies[member].contains(edges[i]))
                    return false;
                used.push_back(member);
            }
        }
        std::sort(used.begin(), used.end());
        return std::adjacent_find(used.begin(), used.end()) == used.end();
    }

    auto find_t_rainbow(const CopyFamily & family, const SmallGraph & f, int t) -> optional<MultiRainbowWitness>
    {
        if (t < 1)
            throw InvalidArgument("t must be at least 1");
        if (f.size() == 0)
            throw InvalidArgument("target graph must have at least one edge");
        if (std::int64_t(family.copies.size()) < std::int64_t(f.size()) * t)
            return std::nullopt;

        auto table = coverage_table(family.copies);
        int members = int(family.copies.size());
        for (auto & f_copy : enumerate_copies(union_of(family), f)) {
            optional<vector<int>> m = (t == 1) ? sdr(f_copy, table, members) : slot_matching(f_copy, table, members, t);
            if (! m)
                continue;

            MultiRainbowWitness witness{ f_copy, {} };
            for (int i = 0 ; i < f_copy.size() ; ++i) {
                vector<int> chosen(m->begin() + i * t, m->begin() + (i + 1) * t);
                std::sort(chosen.begin(), chosen.end());
                witness.assignment.push_back(std::move(chosen));
            }
            return witness;
        }
        return std::nullopt;
    }

    auto berge_view(const CopyFamily & family) -> vector<vector<int>>
    {
        if (! is_clique(without_isolated(family.pattern)) || family.pattern.size() == 0)
            throw InvalidArgument("Berge view needs a clique pattern");

        vector<vector<int>> result;
        for (auto & copy : family.copies) {
            vector<int> vertices;
            for (auto & e : copy.edges()) {
                vertices.push_back(e.u);
                vertices.push_back(e.v);
            }
            std::sort(vertices.begin(), vertices.end());
            vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
            result.push_back(std::move(vertices));
        }
        return result;
    }

    auto berge_contains(int n, std::span<const vector<int>> hyperedges, const SmallGraph & f) -> bool
    {
        if (f.size() == 0)
            throw InvalidArgument("target graph must have at least one edge");
        if (int(hyperedges.size()) < f.size())
            return false;

        SmallGraph shadow(n);
        for (auto & h : hyperedges)
            for (std::size_t i = 0 ; i < h.size() ; ++i)
                for (std::size_t j = i + 1 ; j < h.size() ; ++j)
                    shadow.add_edge(h[i], h[j]);

        auto inside = [] (const vector<int> & h, int x) {
            return std::binary_search(h.begin(), h.end(), x);
        };

        for (auto & f_copy : enumerate_copies(shadow, f)) {
            BipartiteGraph gamma(f_copy.size(), int(hyperedges.size()));
            for (int i = 0 ; i < f_copy.size() ; ++i) {
                auto e = f_copy.edges()[i];
                for (std::size_t h = 0 ; h < hyperedges.size() ; ++h)
                    if (inside(hyperedges[h], e.u) && inside(hyperedges[h], e.v))
                        gamma.add_edge(i, int(h));
            }
            auto m = maximum_matching(gamma);
            if (std::count(m.begin(), m.end(), unmatched) == 0)
                return true;
        }
        return false;
    }

    auto heavy_light_classify(const CopyFamily & family, int threshold) -> HeavyLightSplit
    {
        if (threshold < 1)
            throw InvalidArgument("threshold must be at least 1");

        HeavyLightSplit result;
        result.threshold = threshold;

        auto host = union_of(family);
        for (auto & e : host.edges())
            (containment_count(family, e) >= threshold ? result.heavy_edges : result.light_edges).push_back(e);

        for (int a = 0 ; a < host.order() ; ++a)
            for (int b = a + 1 ; b < host.order() ; ++b) {
                if (! host.adjacent(a, b))
                    continue;
                for (int c = b + 1 ; c < host.order() ; ++c) {
                    if (! host.adjacent(a, c) || ! host.adjacent(b, c))
                        continue;
                    int count = 0;
                    for (auto & copy : family.copies)
                        if (copy.contains(Edge{ a, b }) && copy.contains(Edge{ a, c }) && copy.contains(Edge{ b, c }))
                            ++count;
                    (count >= threshold ? result.heavy_triangles : result.light_triangles).push_back({ a, b, c });
                }
            }

        return result;
    }

    auto colouring_from_family(const CopyFamily & family) -> RedBlueGraph
    {
        auto host = union_of(family);
        auto edges = host.edges();

        BipartiteGraph gamma(int(family.copies.size()), int(edges.size()));
        for (std::size_t a = 0 ; a < family.copies.size() ; ++a)
            for (auto & e : family.copies[a].edges())
                gamma.add_edge(int(a), int(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin()));

        auto m = maximum_matching(gamma);
        auto partition = matching_decomposition(gamma, m);

        RedBlueGraph result(family.n_host);
        for (int b : partition.b1)
            result.set_colour(edges[b], Colour::Blue);
        for (int b : partition.b2)
            result.set_colour(edges[b], Colour::Red);
        return result;
    }
}
