/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/catalog.hh>
#include <rtw/errors.hh>
#include <rtw/graph6.hh>
#include <rtw_cli/specs.hh>

#include <charconv>
#include <set>

using std::string;
using std::string_view;

namespace rtw::cli
{
    namespace
    {
        auto parse_int(string_view text, const string & what) -> int
        {
            int value = 0;
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || end != text.data() + text.size() || text.empty())
                throw InvalidArgument(what + " must be an integer, got \"" + string(text) + "\"");
            return value;
        }

        auto check_keys(const ConstructionSpec & spec, std::set<string> required, std::set<string> optional) -> void
        {
            for (auto & k : required)
                if (! spec.params.contains(k))
                    throw InvalidArgument(spec.name + " needs " + k + "=");
            for (auto & [k, v] : spec.params)
                if (! required.contains(k) && ! optional.contains(k))
                    throw InvalidArgument(spec.name + " does not take " + k + "=");
        }

        auto int_param(const ConstructionSpec & spec, const string & key, int fallback) -> int
        {
            auto it = spec.params.find(key);
            return it == spec.params.end() ? fallback : parse_int(it->second, spec.name + " " + key);
        }
    }

    auto parse_graph_spec(string_view text) -> SmallGraph
    {
        try {
            return make_named(parse_catalog_spec(text));
        }
        catch (const ParseError &) {
        }
        try {
            return parse_graph6(text);
        }
        catch (const ParseError & e) {
            throw ParseError("\"" + string(text) + "\" is neither a catalog name nor graph6: " + e.what(), e.offset());
        }
    }

    auto parse_range(string_view text) -> std::pair<int, int>
    {
        auto dots = text.find("..");
        if (dots == string_view::npos) {
            int n = parse_int(text, "range");
            return { n, n };
        }
        int a = parse_int(text.substr(0, dots), "range start"), b = parse_int(text.substr(dots + 2), "range end");
        if (a > b)
            throw InvalidArgument("range " + string(text) + " is empty");
        return { a, b };
    }

    auto parse_construction_spec(string_view text) -> ConstructionSpec
    {
        ConstructionSpec spec;
        auto colon = text.find(':');
        spec.name = string(text.substr(0, colon));
        if (spec.name.empty())
            throw InvalidArgument("construction spec needs a name");
        if (colon == string_view::npos)
            return spec;

        string last_key;
        auto rest = text.substr(colon + 1);
        while (! rest.empty()) {
            auto comma = rest.find(',');
            auto piece = rest.substr(0, comma);
            auto eq = piece.find('=');
            if (eq == string_view::npos) {
                if (last_key.empty())
                    throw InvalidArgument("construction parameter \"" + string(piece) + "\" needs key=value");
                spec.params[last_key] += "," + string(piece);
            }
            else {
                last_key = string(piece.substr(0, eq));
                if (last_key.empty() || spec.params.contains(last_key))
                    throw InvalidArgument("construction parameter key missing or repeated in \"" + string(piece) + "\"");
                spec.params[last_key] = string(piece.substr(eq + 1));
            }
            if (comma == string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        return spec;
    }

    auto build_construction(const ConstructionSpec & spec) -> Constructed
    {
        if (spec.name == "p4") {
            check_keys(spec, { "n" }, {});
            return p4_construction(int_param(spec, "n", 0));
        }
        if (spec.name == "oddcycle") {
            check_keys(spec, { "n" }, { "k" });
            return odd_cycle_construction(int_param(spec, "n", 0), int_param(spec, "k", 1));
        }
        if (spec.name == "book") {
            check_keys(spec, { "n", "t" }, { "r" });
            int t = int_param(spec, "t", 0);
            return book_construction(int_param(spec, "n", 0), t, int_param(spec, "r", t));
        }
        if (spec.name == "blowup") {
            check_keys(spec, { "f", "host" }, {});
            return blowup_construction(parse_graph_spec(spec.params.at("f")), parse_graph_spec(spec.params.at("host")));
        }
        if (spec.name == "m2") {
            check_keys(spec, { "n" }, {});
            return m2_construction(int_param(spec, "n", 0));
        }
        if (spec.name == "c4f2") {
            check_keys(spec, { "n" }, {});
            return c4_f2_colored_construction(int_param(spec, "n", 0));
        }
        throw InvalidArgument("unknown construction \"" + spec.name + "\" (p4, oddcycle, book, blowup, m2, c4f2)");
    }
}
