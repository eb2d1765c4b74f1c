/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/enumeration.hh>
#include <rtw/errors.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <bitset>
#include <unordered_set>

using std::int64_t;
using std::optional;
using std::uint32_t;
using std::vector;

namespace rtw
{
    namespace
    {
        /// Backtracking over injective vertex maps of the pattern's
        /// non-isolated vertices into the host that send edges to edges.
        class Embedder
        {
            private:
                const SmallGraph & _host;
                const SmallGraph & _pattern;
                vector<int> _order;
                vector<uint32_t> _back_links;    // pattern vertices placed earlier and adjacent
                std::array<int, max_vertices> _image{};
                uint32_t _used = 0;

                template <typename Visit>
                auto extend(std::size_t depth, Visit & visit) -> bool
                {
                    if (depth == _order.size())
                        return visit(_image);

                    int v = _order[depth];
                    uint32_t candidates = _host.vertex_mask() & ~_used;
                    for (uint32_t links = _back_links[depth] ; links ; links &= links - 1)
                        candidates &= _host.neighbours(_image[std::countr_zero(links)]);

                    for ( ; candidates ; candidates &= candidates - 1) {
                        int w = std::countr_zero(candidates);
                        if (_host.degree(w) < _pattern.degree(v))
                            continue;
                        _image[v] = w;
                        _used |= uint32_t{ 1 } << w;
                        bool keep_going = extend(depth + 1, visit);
                        _used &= ~(uint32_t{ 1 } << w);
                        if (! keep_going)
                            return false;
                    }
                    return true;
                }

                auto add_to_order(int v) -> void
                {
                    uint32_t links = 0;
                    for (int w : _order)
                        if (_pattern.adjacent(v, w))
                            links |= uint32_t{ 1 } << w;
                    _order.push_back(v);
                    _back_links.push_back(links);
                }

            public:
                Embedder(const SmallGraph & host, const SmallGraph & pattern, optional<Edge> anchor = std::nullopt) :
                    _host(host),
                    _pattern(pattern)
                {
                    vector<bool> placed(pattern.order(), false);
                    int to_place = 0;
                    for (int v = 0 ; v < pattern.order() ; ++v)
                        if (pattern.degree(v) > 0)
                            ++to_place;
                        else
                            placed[v] = true;

                    if (anchor) {
                        add_to_order(anchor->u);
                        add_to_order(anchor->v);
                        placed[anchor->u] = placed[anchor->v] = true;
                        to_place -= 2;
                    }

                    // most links to what is placed, then highest degree, then lowest index
                    for ( ; to_place > 0 ; --to_place) {
                        int best = -1, best_links = -1;
                        for (int v = 0 ; v < pattern.order() ; ++v) {
                            if (placed[v])
                                continue;
                            int links = 0;
                            for (int w : _order)
                                links += pattern.adjacent(v, w);
                            if (links > best_links || (links == best_links && pattern.degree(v) > pattern.degree(best))) {
                                best = v;
                                best_links = links;
                            }
                        }
                        placed[best] = true;
                        add_to_order(best);
                    }
                }

                /// Fixes the first two pattern vertices in the order.
                template <typename Visit>
                auto run_anchored(int first_image, int second_image, Visit & visit) -> bool
                {
                    if (_host.degree(first_image) < _pattern.degree(_order[0])
                            || _host.degree(second_image) < _pattern.degree(_order[1]))
                        return true;
                    _image[_order[0]] = first_image;
                    _image[_order[1]] = second_image;
                    _used = (uint32_t{ 1 } << first_image) | (uint32_t{ 1 } << second_image);
                    bool result = extend(2, visit);
                    _used = 0;
                    return result;
                }

                template <typename Visit>
                auto run(Visit & visit) -> bool
                {
                    _used = 0;
                    return extend(0, visit);
                }

                [[nodiscard]] auto order() const -> const vector<int> &
                {
                    return _order;
                }
        };

        auto require_edges(const SmallGraph & pattern) -> void
        {
            if (pattern.size() == 0)
                throw InvalidArgument("pattern must have at least one edge");
        }

        auto count_embeddings(const SmallGraph & host, const SmallGraph & pattern) -> int64_t
        {
            int64_t count = 0;
            auto visit = [&] (const auto &) { ++count; return true; };
            Embedder embedder(host, pattern);
            embedder.run(visit);
            return count;
        }

        /// Embeddings whose image contains e, each counted once.
        template <typename Visit>
        auto run_through(const SmallGraph & host, const SmallGraph & pattern, Edge e, Visit & visit) -> bool
        {
            for (auto & pe : pattern.edges()) {
                Embedder embedder(host, pattern, pe);
                if (! embedder.run_anchored(e.u, e.v, visit))
                    return false;
                if (! embedder.run_anchored(e.v, e.u, visit))
                    return false;
            }
            return true;
        }

        auto automorphism_count(const SmallGraph & pattern) -> int64_t
        {
            auto core = without_isolated(pattern);
            return count_embeddings(core, core);
        }
    }

    Copy::Copy(vector<Edge> edges) :
        _edges(std::move(edges))
    {
        for (auto & e : _edges)
            e = make_edge(e.u, e.v);
        std::sort(_edges.begin(), _edges.end());
        if (std::adjacent_find(_edges.begin(), _edges.end()) != _edges.end())
            throw InvalidArgument("copy lists an edge twice");
    }

    auto Copy::contains(Edge e) const -> bool
    {
        return std::binary_search(_edges.begin(), _edges.end(), e);
    }

    auto Copy::vertex_bound() const -> int
    {
        int bound = 0;
        for (auto & e : _edges)
            bound = std::max(bound, e.v + 1);
        return bound;
    }

    auto enumerate_copies(const SmallGraph & host, const SmallGraph & pattern) -> vector<Copy>
    {
        require_edges(pattern);
        if (pattern.order() > host.order())
            return {};

        auto pattern_edges = pattern.edges();
        std::unordered_set<std::bitset<max_edges>> seen;
        vector<Copy> result;

        auto visit = [&] (const std::array<int, max_vertices> & image) {
            std::bitset<max_edges> key;
            for (auto & e : pattern_edges)
                key.set(edge_index(make_edge(image[e.u], image[e.v])));
            if (seen.insert(key).second) {
                vector<Edge> edges;
                edges.reserve(pattern_edges.size());
                for (auto & e : pattern_edges)
                    edges.push_back(make_edge(image[e.u], image[e.v]));
                result.emplace_back(std::move(edges));
            }
            return true;
        };

        Embedder embedder(host, pattern);
        embedder.run(visit);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto count_copies(const SmallGraph & host, const SmallGraph & pattern) -> int64_t
    {
        require_edges(pattern);
        if (pattern.order() > host.order())
            return 0;
        return count_embeddings(host, pattern) / automorphism_count(pattern);
    }

    auto count_copies_through(const SmallGraph & host, const SmallGraph & pattern, Edge e) -> int64_t
    {
        require_edges(pattern);
        if (pattern.order() > host.order() || ! host.has_edge(e))
            return 0;
        int64_t count = 0;
        auto visit = [&] (const auto &) { ++count; return true; };
        run_through(host, pattern, e, visit);
        return count / automorphism_count(pattern);
    }

    auto contains_copy(const SmallGraph & host, const SmallGraph & pattern) -> bool
    {
        require_edges(pattern);
        if (pattern.order() > host.order())
            return false;
        bool found = false;
        auto visit = [&] (const auto &) { found = true; return false; };
        Embedder embedder(host, pattern);
        embedder.run(visit);
        return found;
    }

    auto contains_copy_through(const SmallGraph & host, const SmallGraph & pattern, Edge e) -> bool
    {
        require_edges(pattern);
        if (pattern.order() > host.order() || ! host.has_edge(e))
            return false;
        bool found = false;
        auto visit = [&] (const auto &) { found = true; return false; };
        run_through(host, pattern, e, visit);
        return found;
    }

    auto copies_through_edge(std::span<const Copy> copies, Edge e) -> vector<int>
    {
        vector<int> result;
        for (std::size_t i = 0 ; i < copies.size() ; ++i)
            if (copies[i].contains(e))
                result.push_back(int(i));
        return result;
    }

    RedBlueGraph::RedBlueGraph(int n) :
        _red(n),
        _blue(n)
    {
    }

    RedBlueGraph::RedBlueGraph(SmallGraph red, SmallGraph blue) :
        _red(std::move(red)),
        _blue(std::move(blue))
    {
        if (_red.order() != _blue.order())
            throw InvalidArgument("red and blue layers have different vertex counts");
        for (auto & e : _red.edges())
            if (_blue.has_edge(e))
                throw InvalidArgument("edge " + to_string(e) + " is both red and blue");
    }

    auto RedBlueGraph::graph() const -> SmallGraph
    {
        SmallGraph result = _red;
        for (auto & e : _blue.edges())
            result.add_edge(e);
        return result;
    }

    auto RedBlueGraph::colour(Edge e) const -> optional<Colour>
    {
        if (_red.has_edge(e))
            return Colour::Red;
        if (_blue.has_edge(e))
            return Colour::Blue;
        return std::nullopt;
    }

    auto RedBlueGraph::set_colour(Edge e, Colour c) -> void
    {
        if (c == Colour::Red) {
            _blue.clear_edge(e.u, e.v);
            _red.add_edge(e);
        }
        else {
            _red.clear_edge(e.u, e.v);
            _blue.add_edge(e);
        }
    }

    auto count_colored(const RedBlueGraph & g, const SmallGraph & red_pattern, const SmallGraph & blue_pattern) -> int64_t
    {
        return count_copies(g.red(), red_pattern) + count_copies(g.blue(), blue_pattern);
    }
}
