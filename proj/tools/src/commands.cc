/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <rtw/catalog.hh>
#include <rtw/errors.hh>
#include <rtw/extremal.hh>
#include <rtw/graph6.hh>
#include <rtw_cli/commands.hh>
#include <rtw_cli/document.hh>
#include <rtw_cli/specs.hh>
#include <rtw_cli/suites.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using std::string;

namespace rtw::cli
{
    namespace
    {
        struct BudgetFlags
        {
            std::int64_t max_nodes = Budget{}.max_nodes;
            double max_seconds = Budget{}.max_seconds;

            auto attach(CLI::App * app) -> void
            {
                app->add_option("--max-nodes", max_nodes, "Search node budget")->capture_default_str();
                app->add_option("--max-seconds", max_seconds, "Wall-clock budget in seconds")->capture_default_str();
            }

            auto budget() const -> Budget
            {
                return Budget{ max_nodes, max_seconds };
            }
        };

        auto solve(const string & kind, int n, const SmallGraph & h, const SmallGraph & f, const Budget & budget) -> SearchOutcome
        {
            if (kind == "ex")
                return ex_edges(n, f, budget);
            if (kind == "exh")
                return ex_generalized(n, h, f, budget);
            if (kind == "excol")
                return ex_colored(n, h, f, budget);
            return rb_exact(n, h, f, budget);
        }

        auto read_input(const string & path) -> string
        {
            std::ostringstream buffer;
            if (path == "-")
                buffer << std::cin.rdbuf();
            else {
                std::ifstream in(path, std::ios::binary);
                if (! in)
                    throw InvalidArgument("cannot read " + path);
                buffer << in.rdbuf();
            }
            return buffer.str();
        }

        auto csv_field(const string & s) -> string
        {
            if (s.find_first_of(",\"\n") == string::npos)
                return s;
            string quoted = "\"";
            for (char c : s)
                quoted += c == '"' ? string("\"\"") : string(1, c);
            return quoted + "\"";
        }

        struct Compute
        {
            string kind, h = "K2", f;
            int n = 0;
            BudgetFlags budget;

            auto run(std::ostream & out) const -> int
            {
                auto outcome = solve(kind, n, parse_graph_spec(h), parse_graph_spec(f), budget.budget());
                Json j;
                j["schema"] = schema;
                j["command"] = "compute";
                j["kind"] = kind;
                j["n"] = n;
                if (kind != "ex")
                    j["h"] = h;
                j["f"] = f;
                j["budget"] = { { "max_nodes", budget.max_nodes }, { "max_seconds", budget.max_seconds } };
                j.update(outcome_json(outcome));
                out << j.dump(2) << "\n";
                return outcome.status == SearchStatus::Optimal ? exit_code::ok : exit_code::lower_bound_only;
            }
        };

        struct Construct
        {
            string spec;

            auto run(std::ostream & out, std::ostream & err) const -> int
            {
                auto built = build_construction(parse_construction_spec(spec));
                auto summarise = [&] (const ConstructionReport & r) {
                    err << spec << ": " << r.family.copies.size() << " copies of " << emit_graph6(r.family.pattern)
                        << " on " << r.family.n_host << " vertices, claimed " << r.claimed_size << ", "
                        << (r.rainbow_free ? "no rainbow " : "rainbow ") << emit_graph6(r.f_target)
                        << ", recheck " << (recheck(r) ? "ok" : "FAILED") << "\n";
                };

                if (auto r = std::get_if<ConstructionReport>(&built)) {
                    out << emit_family_document(r->family);
                    summarise(*r);
                }
                else if (auto b = std::get_if<BlowupReport>(&built)) {
                    out << emit_family_document(b->report.family);
                    summarise(b->report);
                    err << "host edges " << b->host_edges << ", cut edges " << b->cut_edges << ", parts " << b->s << "+" << b->t
                        << ", common-neighbour hypothesis " << (b->hypothesis_holds ? "holds" : "fails") << "\n";
                }
                else {
                    auto & g = std::get<RedBlueGraph>(built);
                    out << emit_red_blue_document(g);
                    err << spec << ": " << g.blue().size() << " blue and " << g.red().size() << " red edges, "
                        << (contains_copy(g.graph(), named_graph("F2")) ? "contains F2" : "F2-free")
                        << ", red C4 + blue K2 = " << count_colored(g, named_graph("C4"), named_graph("K2")) << "\n";
                }
                return exit_code::ok;
            }
        };

        struct Verify
        {
            string path, f;
            int t = 1;

            auto run(std::ostream & out) const -> int
            {
                auto family = parse_family_document(read_input(path));
                auto target = parse_graph_spec(f);

                Json j;
                j["schema"] = schema;
                j["command"] = "verify";
                j["copies"] = family.copies.size();
                j["f"] = f;
                j["t"] = t;

                bool found = false;
                if (t == 1) {
                    if (auto w = find_rainbow(family, target)) {
                        found = true;
                        j["rainbow_free"] = false;
                        j["witness"] = { { "f_copy", edges_json(w->f_copy.edges()) }, { "members", w->assignment } };
                    }
                }
                else if (auto w = find_t_rainbow(family, target, t)) {
                    found = true;
                    j["rainbow_free"] = false;
                    j["witness"] = { { "f_copy", edges_json(w->f_copy.edges()) }, { "members", w->assignment } };
                }
                if (! found)
                    j["rainbow_free"] = true;

                out << j.dump(2) << "\n";
                return found ? exit_code::rainbow_found : exit_code::ok;
            }
        };

        struct Table
        {
            string kind, h = "K2", f, range, format = "csv";
            BudgetFlags budget;

            auto run(std::ostream & out) const -> int
            {
                auto [lo, hi] = parse_range(range);
                auto hg = parse_graph_spec(h), fg = parse_graph_spec(f);
                string h_name = kind == "ex" ? "K2" : h;

                Json rows = Json::array();
                bool partial = false;
                if (format == "csv")
                    out << "n,h,f,value,status,certificate,nodes,seconds\n";
                for (int n = lo ; n <= hi ; ++n) {
                    auto o = solve(kind, n, hg, fg, budget.budget());
                    partial = partial || o.status != SearchStatus::Optimal;
                    auto reference = certificate_reference(o.certificate);
                    if (format == "csv") {
                        std::ostringstream seconds;
                        seconds << std::fixed << std::setprecision(6) << o.stats.seconds;
                        out << n << "," << csv_field(h_name) << "," << csv_field(f) << "," << o.value << ","
                            << to_string(o.status) << "," << csv_field(reference) << "," << o.stats.nodes << ","
                            << seconds.str() << "\n";
                    }
                    else
                        rows.push_back({ { "n", n }, { "h", h_name }, { "f", f }, { "value", o.value },
                                { "status", to_string(o.status) }, { "certificate", reference },
                                { "nodes", o.stats.nodes }, { "seconds", o.stats.seconds } });
                }
                if (format == "json") {
                    Json j;
                    j["schema"] = schema;
                    j["command"] = "table";
                    j["kind"] = kind;
                    j["rows"] = rows;
                    out << j.dump(2) << "\n";
                }
                return partial ? exit_code::lower_bound_only : exit_code::ok;
            }
        };

        struct Check
        {
            string suite;
            std::uint64_t seed = 1;
            int trials = 0;

            auto run(std::ostream & out) const -> int
            {
                auto report = run_suite(suite, seed, trials);
                out << "suite " << report.name << ": seed " << report.seed << ", trials " << report.trials
                    << ", violations " << report.violations << "\n";
                for (auto & note : report.notes)
                    out << "  note: " << note << "\n";
                if (report.violations) {
                    out << "counterexample:\n" << report.counterexample << "\n";
                    return exit_code::violation;
                }
                return exit_code::ok;
            }
        };
    }

    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Rainbow Turan numbers: exact small-case solvers, constructions and verifiers", "rtw" };
        app.require_subcommand(1);
        // --h names a graph, so help is long-form only
        app.set_help_flag("--help", "Print this help message and exit");

        const std::vector<string> kinds{ "ex", "exh", "excol", "rb" };

        Compute compute;
        auto compute_cmd = app.add_subcommand("compute", "Solve ex, exh (generalized), excol (coloured) or rb exactly; "
                "prints JSON. Exit 0 optimal, 2 budget hit, 1 usage error");
        compute_cmd->add_option("kind", compute.kind, "ex | exh | excol | rb")->required()->check(CLI::IsMember(kinds));
        compute_cmd->add_option("--n", compute.n, "Number of vertices")->required();
        compute_cmd->add_option("--h", compute.h, "Counted graph H (catalog name or graph6)")->capture_default_str();
        compute_cmd->add_option("--f", compute.f, "Forbidden graph F (catalog name or graph6)")->required();
        compute.budget.attach(compute_cmd);

        Construct construct;
        auto construct_cmd = app.add_subcommand("construct", "Emit a construction as a family document on stdout, "
                "summary on stderr. Specs: p4:n=N, oddcycle:n=N,k=K, book:n=N,t=T,r=R, blowup:f=F,host=G6, m2:n=N, c4f2:n=N");
        construct_cmd->add_option("spec", construct.spec, "Construction spec")->required();

        Verify verify;
        auto verify_cmd = app.add_subcommand("verify", "Check a family document for a rainbow F; "
                "exit 0 rainbow-free, 3 rainbow found (witness printed), 1 invalid input");
        verify_cmd->add_option("path", verify.path, "Family document, or - for stdin")->required();
        verify_cmd->add_option("--f", verify.f, "Target graph F")->required();
        verify_cmd->add_option("--t", verify.t, "Members per edge (t-wise rainbow)")->capture_default_str()
            ->check(CLI::PositiveNumber);

        Table table;
        auto table_cmd = app.add_subcommand("table", "One row per n; exit 2 if any row is only a lower bound");
        table_cmd->add_option("kind", table.kind, "ex | exh | excol | rb")->required()->check(CLI::IsMember(kinds));
        table_cmd->add_option("--h", table.h, "Counted graph H")->capture_default_str();
        table_cmd->add_option("--f", table.f, "Forbidden graph F")->required();
        table_cmd->add_option("--n", table.range, "Range a..b or a single n")->required();
        table_cmd->add_option("--format", table.format, "csv | json")->capture_default_str()
            ->check(CLI::IsMember({ "csv", "json" }));
        table.budget.attach(table_cmd);

        Check check;
        auto check_cmd = app.add_subcommand("check", "Run a seeded property suite; exit 4 with a counterexample on any violation");
        check_cmd->add_option("--suite", check.suite, "sandwich | decomposition | berge | monotone | greedy")->required()
            ->check(CLI::IsMember(suite_names()));
        check_cmd->add_option("--seed", check.seed, "Random seed")->capture_default_str();
        check_cmd->add_option("--trials", check.trials, "Trials, 0 for the suite default")->capture_default_str();

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_code::ok : exit_code::usage;
        }

        try {
            if (compute_cmd->parsed())
                return compute.run(out);
            if (construct_cmd->parsed())
                return construct.run(out, err);
            if (verify_cmd->parsed())
                return verify.run(out);
            if (table_cmd->parsed())
                return table.run(out);
            return check.run(out);
        }
        catch (const Error & e) {
            err << "rtw: " << e.what() << "\n";
            return exit_code::usage;
        }
    }
}
