/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_GRAPH6_HH
#define RTW_GUARD_GRAPH6_HH 1

#include <rtw/graph.hh>

#include <string>
#include <string_view>

namespace rtw
{
    /// Header-less graph6. Upper triangle bits in column order
    /// (0,1),(0,2),(1,2),(0,3),..., six per byte, zero padded, plus 63.
    auto emit_graph6(const SmallGraph & g) -> std::string;

    /// Inverse of emit_graph6. A single trailing newline is tolerated.
    /// Malformed input throws ParseError carrying the offending byte offset;
    /// orders above 32 throw CapacityError.
    auto parse_graph6(std::string_view text) -> SmallGraph;
}

#endif
