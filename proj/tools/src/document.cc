/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/errors.hh>
#include <rtw/graph6.hh>
#include <rtw_cli/document.hh>

#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace rtw::cli
{
    namespace
    {
        auto compact_edges(const vector<Edge> & edges) -> string
        {
            string result = "[";
            for (std::size_t i = 0 ; i < edges.size() ; ++i) {
                if (i)
                    result += ",";
                result += "[" + std::to_string(edges[i].u) + "," + std::to_string(edges[i].v) + "]";
            }
            return result + "]";
        }

        auto edge_lines(std::ostream & out, const vector<vector<Edge>> & rows) -> void
        {
            if (rows.empty()) {
                out << "[]";
                return;
            }
            out << "[\n";
            for (std::size_t i = 0 ; i < rows.size() ; ++i)
                out << "    " << compact_edges(rows[i]) << (i + 1 < rows.size() ? ",\n" : "\n");
            out << "  ]";
        }

        auto require(bool ok, const string & what) -> void
        {
            if (! ok)
                throw InvalidArgument("family document: " + what);
        }

        auto parse_edge(const Json & j) -> Edge
        {
            require(j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer(),
                    "every edge must be a pair of integers");
            int a = j[0].get<int>(), b = j[1].get<int>();
            require(a >= 0 && b >= 0 && a != b, "edge endpoints must be distinct non-negative integers");
            return make_edge(a, b);
        }
    }

    auto emit_family_document(const CopyFamily & family) -> string
    {
        auto sorted = normalised(family);
        vector<vector<Edge>> rows;
        for (auto & c : sorted.copies)
            rows.push_back(c.edges());

        std::ostringstream out;
        out << "{\n"
            << "  \"schema\": " << Json(schema).dump() << ",\n"
            << "  \"n_host\": " << family.n_host << ",\n"
            << "  \"pattern\": " << Json(emit_graph6(family.pattern)).dump() << ",\n"
            << "  \"multiplicity\": " << (family.allow_multiplicity ? "true" : "false") << ",\n"
            << "  \"copies\": ";
        edge_lines(out, rows);
        out << "\n}\n";
        return out.str();
    }

    auto parse_family_document(string_view text) -> CopyFamily
    {
        Json j;
        try {
            j = Json::parse(text);
        }
        catch (const Json::parse_error & e) {
            throw ParseError(string("family document is not JSON: ") + e.what(), e.byte ? e.byte - 1 : 0);
        }

        require(j.is_object(), "top level must be an object");
        require(j.contains("schema") && j["schema"] == schema, string("schema must be \"") + schema + "\"");
        require(j.contains("n_host") && j["n_host"].is_number_integer(), "n_host must be an integer");
        require(j.contains("pattern") && j["pattern"].is_string(), "pattern must be a graph6 string");
        require(j.contains("copies") && j["copies"].is_array(), "copies must be a list");
        if (j.contains("multiplicity"))
            require(j["multiplicity"].is_boolean(), "multiplicity must be a boolean");

        CopyFamily family;
        family.n_host = j["n_host"].get<int>();
        family.pattern = parse_graph6(j["pattern"].get<string>());
        family.allow_multiplicity = j.value("multiplicity", false);
        for (auto & c : j["copies"]) {
            require(c.is_array(), "every copy must be a list of edges");
            vector<Edge> edges;
            for (auto & e : c)
                edges.push_back(parse_edge(e));
            family.copies.emplace_back(std::move(edges));
        }
        validate(family);
        return family;
    }

    auto emit_red_blue_document(const RedBlueGraph & g) -> string
    {
        std::ostringstream out;
        out << "{\n"
            << "  \"schema\": " << Json(schema).dump() << ",\n"
            << "  \"n\": " << g.order() << ",\n"
            << "  \"red\": " << compact_edges(g.red().edges()) << ",\n"
            << "  \"blue\": " << compact_edges(g.blue().edges()) << "\n"
            << "}\n";
        return out.str();
    }

    auto edges_json(const vector<Edge> & edges) -> Json
    {
        Json result = Json::array();
        for (auto & e : edges)
            result.push_back(Json::array({ e.u, e.v }));
        return result;
    }

    auto certificate_json(const Certificate & certificate) -> Json
    {
        Json j;
        if (auto g = std::get_if<SmallGraph>(&certificate)) {
            j["type"] = "graph";
            j["graph6"] = emit_graph6(*g);
            j["edges"] = edges_json(g->edges());
        }
        else if (auto rb = std::get_if<RedBlueGraph>(&certificate)) {
            j["type"] = "red_blue";
            j["n"] = rb->order();
            j["red"] = edges_json(rb->red().edges());
            j["blue"] = edges_json(rb->blue().edges());
        }
        else {
            auto & family = std::get<CopyFamily>(certificate);
            j["type"] = "family";
            j["n_host"] = family.n_host;
            j["pattern"] = emit_graph6(family.pattern);
            j["copies"] = Json::array();
            for (auto & c : family.copies)
                j["copies"].push_back(edges_json(c.edges()));
        }
        return j;
    }

    auto certificate_reference(const Certificate & certificate) -> string
    {
        if (auto g = std::get_if<SmallGraph>(&certificate))
            return emit_graph6(*g);
        if (auto rb = std::get_if<RedBlueGraph>(&certificate))
            return "red:" + emit_graph6(rb->red()) + " blue:" + emit_graph6(rb->blue());

        string result;
        for (auto & c : std::get<CopyFamily>(certificate).copies) {
            if (! result.empty())
                result += "|";
            for (std::size_t i = 0 ; i < c.edges().size() ; ++i)
                result += (i ? " " : "") + std::to_string(c.edges()[i].u) + "-" + std::to_string(c.edges()[i].v);
        }
        return result;
    }

    auto outcome_json(const SearchOutcome & outcome) -> Json
    {
        Json j;
        j["value"] = outcome.value;
        j["status"] = to_string(outcome.status);
        j["certificate"] = certificate_json(outcome.certificate);
        j["stats"] = {
            { "nodes", outcome.stats.nodes },
            { "seconds", outcome.stats.seconds },
            { "bound_prunes", outcome.stats.bound_prunes },
            { "feasibility_prunes", outcome.stats.feasibility_prunes }
        };
        return j;
    }
}
