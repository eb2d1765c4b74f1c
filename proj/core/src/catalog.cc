/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/catalog.hh>
#include <rtw/errors.hh>

#include <charconv>
#include <limits>

using std::string;
using std::string_view;

namespace rtw
{
    using std::to_string;

    namespace
    {
        auto require_positive(int value, const char * what) -> void
        {
            if (value < 1)
                throw InvalidArgument(string(what) + " must be positive, got " + to_string(value));
        }

        auto require_capacity(long long n) -> void
        {
            if (n > max_vertices)
                throw CapacityError("named graph needs " + to_string(n) + " vertices, cap is "
                        + to_string(max_vertices));
        }

        auto parse_number(string_view text, std::size_t offset, std::size_t & used) -> int
        {
            int value = 0;
            auto begin = text.data() + offset, end = text.data() + text.size();
            auto [ptr, ec] = std::from_chars(begin, end, value);
            if (ec != std::errc() || ptr == begin)
                throw ParseError("expected a number in graph name '" + string(text) + "'", offset);
            used = std::size_t(ptr - begin);
            return value;
        }
    }

    auto make_named(const CatalogSpec & spec) -> SmallGraph
    {
        switch (spec.kind) {
            case GraphKind::Path: {
                require_positive(spec.first, "path order");
                require_capacity(spec.first);
                SmallGraph g(spec.first);
                for (int v = 0 ; v + 1 < spec.first ; ++v)
                    g.add_edge(v, v + 1);
                return g;
            }

            case GraphKind::Cycle: {
                if (spec.first < 3)
                    throw InvalidArgument("cycle needs at least 3 vertices");
                require_capacity(spec.first);
                SmallGraph g(spec.first);
                for (int v = 0 ; v < spec.first ; ++v)
                    g.add_edge(v, (v + 1) % spec.first);
                return g;
            }

            case GraphKind::Clique: {
                require_positive(spec.first, "clique order");
                require_capacity(spec.first);
                SmallGraph g(spec.first);
                for (int a = 0 ; a < spec.first ; ++a)
                    for (int b = a + 1 ; b < spec.first ; ++b)
                        g.add_edge(a, b);
                return g;
            }

            case GraphKind::CompleteBipartite: {
                require_positive(spec.first, "part size");
                require_positive(spec.second, "part size");
                require_capacity(0LL + spec.first + spec.second);
                SmallGraph g(spec.first + spec.second);
                for (int a = 0 ; a < spec.first ; ++a)
                    for (int b = 0 ; b < spec.second ; ++b)
                        g.add_edge(a, spec.first + b);
                return g;
            }

            case GraphKind::Matching: {
                require_positive(spec.first, "matching size");
                require_capacity(2LL * spec.first);
                SmallGraph g(2 * spec.first);
                for (int i = 0 ; i < spec.first ; ++i)
                    g.add_edge(2 * i, 2 * i + 1);
                return g;
            }

            case GraphKind::Book: {
                require_positive(spec.first, "page count");
                require_capacity(spec.first + 2LL);
                SmallGraph g(spec.first + 2);
                g.add_edge(0, 1);
                for (int p = 2 ; p < spec.first + 2 ; ++p) {
                    g.add_edge(0, p);
                    g.add_edge(1, p);
                }
                return g;
            }

            case GraphKind::TwoTrianglesSharingVertex: {
                SmallGraph g(5);
                for (auto [a, b] : { std::pair{ 0, 1 }, { 0, 2 }, { 1, 2 }, { 0, 3 }, { 0, 4 }, { 3, 4 } })
                    g.add_edge(a, b);
                return g;
            }

            case GraphKind::Turan: {
                require_positive(spec.first, "Turan vertex count");
                require_positive(spec.second, "Turan part count");
                require_capacity(spec.first);
                int n = spec.first, r = spec.second;
                std::vector<int> part(n);
                int v = 0;
                for (int p = 0 ; p < r ; ++p) {
                    int size = n / r + (p < n % r ? 1 : 0);
                    for (int i = 0 ; i < size ; ++i)
                        part[v++] = p;
                }
                SmallGraph g(n);
                for (int a = 0 ; a < n ; ++a)
                    for (int b = a + 1 ; b < n ; ++b)
                        if (part[a] != part[b])
                            g.add_edge(a, b);
                return g;
            }

            case GraphKind::Empty:
                if (spec.first < 0)
                    throw InvalidArgument("negative vertex count");
                require_capacity(spec.first);
                return SmallGraph(spec.first);
        }

        throw InvalidArgument("unknown graph kind");
    }

    auto parse_catalog_spec(string_view text) -> CatalogSpec
    {
        if (text.empty())
            throw ParseError("empty graph name", 0);

        std::size_t used = 0;
        auto one_number = [&] () {
            int value = parse_number(text, 1, used);
            if (1 + used != text.size())
                throw ParseError("trailing characters in graph name '" + string(text) + "'", 1 + used);
            return value;
        };
        auto two_numbers = [&] () {
            int a = parse_number(text, 1, used);
            std::size_t comma = 1 + used;
            if (comma >= text.size() || text[comma] != ',')
                throw ParseError("expected ',' in graph name '" + string(text) + "'", comma);
            int b = parse_number(text, comma + 1, used);
            if (comma + 1 + used != text.size())
                throw ParseError("trailing characters in graph name '" + string(text) + "'", comma + 1 + used);
            return std::pair{ a, b };
        };

        switch (text[0]) {
            case 'P': return CatalogSpec{ GraphKind::Path, one_number() };
            case 'C': return CatalogSpec{ GraphKind::Cycle, one_number() };
            case 'M': return CatalogSpec{ GraphKind::Matching, one_number() };
            case 'B': return CatalogSpec{ GraphKind::Book, one_number() };
            case 'E': return CatalogSpec{ GraphKind::Empty, one_number() };
            case 'F':
                if (text != "F2")
                    throw ParseError("only F2 is in the catalog", 1);
                return CatalogSpec{ GraphKind::TwoTrianglesSharingVertex, 2 };
            case 'K':
                if (text.find(',') == string_view::npos)
                    return CatalogSpec{ GraphKind::Clique, one_number() };
                else {
                    auto [a, b] = two_numbers();
                    return CatalogSpec{ GraphKind::CompleteBipartite, a, b };
                }
            case 'T': {
                auto [a, b] = two_numbers();
                return CatalogSpec{ GraphKind::Turan, a, b };
            }
            default:
                throw ParseError("unknown graph name '" + string(text) + "'", 0);
        }
    }

    auto to_string(const CatalogSpec & spec) -> string
    {
        switch (spec.kind) {
            case GraphKind::Path:                      return "P" + to_string(spec.first);
            case GraphKind::Cycle:                     return "C" + to_string(spec.first);
            case GraphKind::Clique:                    return "K" + to_string(spec.first);
            case GraphKind::CompleteBipartite:         return "K" + to_string(spec.first) + "," + to_string(spec.second);
            case GraphKind::Matching:                  return "M" + to_string(spec.first);
            case GraphKind::Book:                      return "B" + to_string(spec.first);
            case GraphKind::TwoTrianglesSharingVertex: return "F2";
            case GraphKind::Turan:                     return "T" + to_string(spec.first) + "," + to_string(spec.second);
            case GraphKind::Empty:                     return "E" + to_string(spec.first);
        }
        return "?";
    }

    auto named_graph(string_view text) -> SmallGraph
    {
        return make_named(parse_catalog_spec(text));
    }
}
