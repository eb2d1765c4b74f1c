/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/errors.hh>
#include <rtw/graph6.hh>

using std::string;
using std::string_view;

namespace rtw
{
    using std::to_string;

    auto emit_graph6(const SmallGraph & g) -> string
    {
        string result;
        result.push_back(char(63 + g.order()));

        int bits = 0, pending = 0;
        for (int v = 1 ; v < g.order() ; ++v)
            for (int u = 0 ; u < v ; ++u) {
                pending = (pending << 1) | (g.adjacent(u, v) ? 1 : 0);
                if (++bits == 6) {
                    result.push_back(char(63 + pending));
                    bits = pending = 0;
                }
            }
        if (bits != 0)
            result.push_back(char(63 + (pending << (6 - bits))));

        return result;
    }

    auto parse_graph6(string_view text) -> SmallGraph
    {
        if (text.ends_with('\n'))
            text.remove_suffix(1);
        if (text.ends_with('\r'))
            text.remove_suffix(1);

        if (text.empty())
            throw ParseError("empty graph6 string", 0);
        if (text.starts_with(">>graph6<<"))
            throw ParseError("graph6 header is not accepted, strip it first", 0);

        auto first = static_cast<unsigned char>(text[0]);
        if (first == 126)
            throw CapacityError("graph6 multi-byte order means more than 62 vertices, cap is "
                    + to_string(max_vertices));
        if (first < 63 || first > 125)
            throw ParseError("invalid graph6 order byte", 0);

        int n = first - 63;
        if (n > max_vertices)
            throw CapacityError("graph6 order " + to_string(n) + " exceeds the "
                    + to_string(max_vertices) + "-vertex cap");

        std::size_t total_bits = std::size_t(n) * (n - 1) / 2;
        std::size_t expected = 1 + (total_bits + 5) / 6;
        for (std::size_t i = 1 ; i < text.size() && i < expected ; ++i) {
            auto c = static_cast<unsigned char>(text[i]);
            if (c < 63 || c > 126)
                throw ParseError("invalid graph6 data byte", i);
        }
        if (text.size() < expected)
            throw ParseError("graph6 string too short for " + to_string(n) + " vertices", text.size());
        if (text.size() > expected)
            throw ParseError("trailing bytes after graph6 data", expected);

        SmallGraph g(n);
        std::size_t bit = 0;
        for (int v = 1 ; v < n ; ++v)
            for (int u = 0 ; u < v ; ++u, ++bit) {
                int byte = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
                if ((byte >> (5 - bit % 6)) & 1)
                    g.add_edge(u, v);
            }

        if (bit % 6 != 0) {
            int byte = static_cast<unsigned char>(text[expected - 1]) - 63;
            int padding = int(6 - bit % 6);
            if ((byte & ((1 << padding) - 1)) != 0)
                throw ParseError("non-zero graph6 padding bits", expected - 1);
        }

        return g;
    }
}
