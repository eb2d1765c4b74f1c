/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_RTW_CLI_SPECS_HH
#define RTW_GUARD_RTW_CLI_SPECS_HH 1

#include <rtw/constructions.hh>
#include <rtw/graph.hh>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace rtw::cli
{
    /// Catalog name first ("P4", "K2,3", ...), then graph6.
    auto parse_graph_spec(std::string_view text) -> SmallGraph;

    /// "a..b" or a single integer.
    auto parse_range(std::string_view text) -> std::pair<int, int>;

    struct ConstructionSpec
    {
        std::string name;
        std::map<std::string, std::string> params;
    };

    /// "name:key=value,key=value". A comma not followed by "key=" belongs to
    /// the previous value, so "f=K2,3" keeps its comma.
    auto parse_construction_spec(std::string_view text) -> ConstructionSpec;

    using Constructed = std::variant<ConstructionReport, BlowupReport, RedBlueGraph>;

    /// Runs the named construction: p4 (n), oddcycle (n, k = 1), book (n, t,
    /// r = t), blowup (f, host), m2 (n), c4f2 (n). Throws InvalidArgument for
    /// unknown names, missing or unknown keys.
    auto build_construction(const ConstructionSpec & spec) -> Constructed;
}

#endif
