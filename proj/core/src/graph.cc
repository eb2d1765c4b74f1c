/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/errors.hh>
#include <rtw/graph.hh>

#include <algorithm>
#include <bit>
#include <sstream>

using std::string;
using std::vector;

namespace rtw
{
    using std::to_string;

    auto make_edge(int a, int b) -> Edge
    {
        if (a == b)
            throw InvalidArgument("loop at vertex " + to_string(a) + " is not an edge");
        if (a < 0 || b < 0)
            throw InvalidArgument("negative vertex index");
        return a < b ? Edge{ a, b } : Edge{ b, a };
    }

    auto edge_index(Edge e) -> int
    {
        // pairs (u, *) for smaller u come first; row u holds max_vertices - 1 - u pairs
        return e.u * (2 * max_vertices - e.u - 1) / 2 + (e.v - e.u - 1);
    }

    auto to_string(Edge e) -> string
    {
        return to_string(e.u) + "-" + to_string(e.v);
    }

    SmallGraph::SmallGraph(int n) :
        _order(n)
    {
        if (n < 0)
            throw InvalidArgument("negative vertex count");
        if (n > max_vertices)
            throw CapacityError("graph on " + to_string(n) + " vertices exceeds the "
                    + to_string(max_vertices) + "-vertex cap");
    }

    SmallGraph::SmallGraph(int n, std::span<const Edge> edges) :
        SmallGraph(n)
    {
        for (auto & e : edges)
            add_edge(e.u, e.v);
    }

    auto SmallGraph::size() const -> int
    {
        int total = 0;
        for (int a = 0 ; a < _order ; ++a)
            total += std::popcount(_rows[a]);
        return total / 2;
    }

    auto SmallGraph::degree(int a) const -> int
    {
        return std::popcount(_rows[a]);
    }

    auto SmallGraph::vertex_mask() const -> std::uint32_t
    {
        return _order == 32 ? ~std::uint32_t{ 0 } : ((std::uint32_t{ 1 } << _order) - 1);
    }

    auto SmallGraph::add_edge(int a, int b) -> void
    {
        if (a == b)
            throw InvalidArgument("loop at vertex " + to_string(a) + " is not allowed");
        if (a < 0 || b < 0 || a >= _order || b >= _order)
            throw InvalidArgument("edge " + to_string(a) + "-" + to_string(b)
                    + " lies outside a graph on " + to_string(_order) + " vertices");
        _rows[a] |= std::uint32_t{ 1 } << b;
        _rows[b] |= std::uint32_t{ 1 } << a;
    }

    auto SmallGraph::clear_edge(int a, int b) -> void
    {
        _rows[a] &= ~(std::uint32_t{ 1 } << b);
        _rows[b] &= ~(std::uint32_t{ 1 } << a);
    }

    auto SmallGraph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (int a = 0 ; a < _order ; ++a)
            for (int b = a + 1 ; b < _order ; ++b)
                if (adjacent(a, b))
                    result.push_back(Edge{ a, b });
        return result;
    }

    auto SmallGraph::degree_sequence() const -> vector<int>
    {
        vector<int> result;
        for (int a = 0 ; a < _order ; ++a)
            result.push_back(degree(a));
        std::sort(result.begin(), result.end(), std::greater<int>());
        return result;
    }

    auto remove_edge(const SmallGraph & g, int u, int v) -> SmallGraph
    {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v || ! g.adjacent(u, v))
            throw InvalidArgument("cannot remove non-edge " + to_string(u) + "-" + to_string(v));
        SmallGraph result = g;
        result.clear_edge(u, v);
        return result;
    }

    auto union_graph(std::span<const vector<Edge>> edge_sets, int n) -> SmallGraph
    {
        SmallGraph result(n);
        for (auto & edges : edge_sets)
            for (auto & e : edges)
                result.add_edge(e.u, e.v);
        return result;
    }

    auto spanned_graph(std::span<const Edge> edges) -> SmallGraph
    {
        vector<int> vertices;
        for (auto & e : edges) {
            vertices.push_back(e.u);
            vertices.push_back(e.v);
        }
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

        auto relabel = [&] (int x) {
            return int(std::lower_bound(vertices.begin(), vertices.end(), x) - vertices.begin());
        };

        SmallGraph result(int(vertices.size()));
        for (auto & e : edges)
            result.add_edge(relabel(e.u), relabel(e.v));
        return result;
    }

    auto without_isolated(const SmallGraph & g) -> SmallGraph
    {
        auto edges = g.edges();
        return spanned_graph(edges);
    }

    auto disjoint_union(const SmallGraph & a, const SmallGraph & b) -> SmallGraph
    {
        SmallGraph result(a.order() + b.order(), a.edges());
        for (auto & e : b.edges())
            result.add_edge(e.u + a.order(), e.v + a.order());
        return result;
    }

    auto to_string(const SmallGraph & g) -> string
    {
        std::ostringstream s;
        s << "n=" << g.order() << " {";
        bool first = true;
        for (auto & e : g.edges()) {
            if (! first)
                s << ", ";
            first = false;
            s << e.u << "-" << e.v;
        }
        s << "}";
        return s.str();
    }
}
