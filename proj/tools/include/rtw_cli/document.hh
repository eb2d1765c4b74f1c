/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RTW_GUARD_RTW_CLI_DOCUMENT_HH
#define RTW_GUARD_RTW_CLI_DOCUMENT_HH 1

#include <rtw/enumeration.hh>
#include <rtw/extremal.hh>
#include <rtw/rainbow.hh>

#include <json.hpp>

#include <string>
#include <string_view>

namespace rtw::cli
{
    using Json = nlohmann::ordered_json;

    inline constexpr const char * schema = "rtw/1";

    /**
     * Family documents are JSON with one copy per line:
     *
     *     {
     *       "schema": "rtw/1",
     *       "n_host": 6,
     *       "pattern": "Ch",
     *       "multiplicity": false,
     *       "copies": [
     *         [[0,1],[1,3],[2,3]],
     *         ...
     *       ]
     *     }
     *
     * Copies are written in sorted order, edges low vertex first. The pattern
     * is a graph6 string.
     */
    auto emit_family_document(const CopyFamily & family) -> std::string;

    /// Parses and validates a family document; copies keep the file's order.
    /// Throws ParseError or InvalidArgument.
    auto parse_family_document(std::string_view text) -> CopyFamily;

    auto emit_red_blue_document(const RedBlueGraph & g) -> std::string;

    auto edges_json(const std::vector<Edge> & edges) -> Json;
    auto certificate_json(const Certificate & certificate) -> Json;

    /// Short single-field form for table rows: graph6, red/blue graph6 pair,
    /// or copies as "0-1 1-2|...".
    auto certificate_reference(const Certificate & certificate) -> std::string;

    auto outcome_json(const SearchOutcome & outcome) -> Json;
}

#endif
