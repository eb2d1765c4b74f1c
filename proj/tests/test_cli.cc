/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include <rtw/catalog.hh>
#include <rtw/errors.hh>
#include <rtw_cli/commands.hh>
#include <rtw_cli/document.hh>
#include <rtw_cli/specs.hh>
#include <rtw_cli/suites.hh>

#include "generators.hh"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace rtw;
using namespace rtw::cli;

namespace
{
    struct Result
    {
        int code;
        std::string out, err;
    };

    auto invoke(std::vector<std::string> args) -> Result
    {
        args.insert(args.begin(), "rtw");
        std::vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code = run(int(argv.size()), argv.data(), out, err);
        return { code, out.str(), err.str() };
    }

    auto write_temp(const std::string & name, const std::string & text) -> std::string
    {
        auto path = "rtw_test_" + name + ".json";
        std::ofstream(path, std::ios::binary) << text;
        return path;
    }
}

TEST_SUITE("cli")
{
    TEST_CASE("family document round trip is byte-identical")
    {
        gen::Rng rng(17);
        const char * patterns[] = { "K3", "P4", "M2", "C4", "P3" };
        for (int trial = 0 ; trial < 200 ; ++trial) {
            int n = gen::uniform(rng, 4, 9);
            auto family = gen::random_family(rng, n, named_graph(patterns[trial % 5]), gen::uniform(rng, 0, 8));
            auto text = emit_family_document(family);
            auto parsed = parse_family_document(text);
            CHECK(emit_family_document(parsed) == text);
            CHECK(parsed.n_host == n);
            CHECK(parsed.copies.size() == family.copies.size());
        }
    }

    TEST_CASE("family document layout")
    {
        CopyFamily family{ 4, named_graph("P3"), { Copy({ { 1, 3 }, { 0, 1 } }) }, false };
        CHECK(emit_family_document(family) ==
                "{\n  \"schema\": \"rtw/1\",\n  \"n_host\": 4,\n  \"pattern\": \"Bg\",\n"
                "  \"multiplicity\": false,\n  \"copies\": [\n    [[0,1],[1,3]]\n  ]\n}\n");
        CopyFamily empty{ 3, named_graph("K3"), {}, false };
        CHECK(emit_family_document(empty).find("\"copies\": []") != std::string::npos);
    }

    TEST_CASE("family document errors")
    {
        CHECK_THROWS_AS(parse_family_document("{"), ParseError);
        CHECK_THROWS_AS(parse_family_document(R"({"schema":"rtw/2","n_host":4,"pattern":"Bo","multiplicity":false,"copies":[]})"), InvalidArgument);
        CHECK_THROWS_AS(parse_family_document(R"({"schema":"rtw/1","n_host":4,"pattern":"Bw","multiplicity":false,"copies":[[[0,1],[1,2]]]})"), InvalidArgument);
        CHECK_THROWS_AS(parse_family_document(R"({"schema":"rtw/1","n_host":3,"pattern":"Bw","multiplicity":false,"copies":[[[0,1],[1,2],[0,3]]]})"), InvalidArgument);
        try {
            parse_family_document("{\"schema\": x}");
            FAIL("expected a parse error");
        }
        catch (const ParseError & e) {
            CHECK(e.offset() == 11);
        }
    }

    TEST_CASE("spec parsing")
    {
        auto s = parse_construction_spec("blowup:f=K2,3,host=Dhc");
        CHECK(s.name == "blowup");
        CHECK(s.params.at("f") == "K2,3");
        CHECK(s.params.at("host") == "Dhc");
        CHECK(parse_construction_spec("p4:n=10").params.at("n") == "10");
        CHECK_THROWS_AS(parse_construction_spec("p4:10"), InvalidArgument);
        CHECK_THROWS_AS(parse_construction_spec("p4:n=1,n=2"), InvalidArgument);
        CHECK_THROWS_AS(build_construction(parse_construction_spec("p4:n=ten")), InvalidArgument);
        CHECK_THROWS_AS(build_construction(parse_construction_spec("p4:n=8,k=1")), InvalidArgument);

        CHECK(parse_range("4..7") == std::pair{ 4, 7 });
        CHECK(parse_range("5") == std::pair{ 5, 5 });
        CHECK_THROWS_AS(parse_range("7..4"), InvalidArgument);

        CHECK(parse_graph_spec("K4").size() == 6);
        CHECK(parse_graph_spec("Dhc").size() == 5);
        CHECK_THROWS_AS(parse_graph_spec("not a graph"), Error);
        CHECK_THROWS_AS(parse_graph_spec("C"), ParseError);
    }

    TEST_CASE("compute")
    {
        auto r = invoke({ "compute", "rb", "--n", "5", "--h", "P4", "--f", "P4" });
        REQUIRE(r.code == exit_code::ok);
        auto j = Json::parse(r.out);
        CHECK(j["schema"] == "rtw/1");
        CHECK(j["value"] == 2);
        CHECK(j["status"] == "optimal");
        CHECK(j["certificate"]["type"] == "family");

        r = invoke({ "compute", "ex", "--n", "4", "--f", "K3" });
        REQUIRE(r.code == exit_code::ok);
        CHECK(Json::parse(r.out)["value"] == 4);

        r = invoke({ "compute", "rb", "--n", "8", "--h", "K3", "--f", "K3", "--max-nodes", "50" });
        CHECK(r.code == exit_code::lower_bound_only);
        CHECK(Json::parse(r.out)["status"] == "lower_bound_only");

        CHECK(invoke({ "compute", "rb", "--n", "5", "--h", "P4" }).code == exit_code::usage);
        CHECK(invoke({ "compute", "nope", "--n", "5", "--f", "P4" }).code == exit_code::usage);
        CHECK(invoke({ "compute", "rb", "--n", "5", "--h", "P4", "--f", "zz" }).code == exit_code::usage);
        CHECK(invoke({}).code == exit_code::usage);
        CHECK(invoke({ "--help" }).code == exit_code::ok);
    }

    TEST_CASE("construct")
    {
        auto r = invoke({ "construct", "p4:n=10" });
        REQUIRE(r.code == exit_code::ok);
        CHECK(parse_family_document(r.out).copies.size() == 7);
        CHECK(r.err.find("recheck ok") != std::string::npos);

        CHECK(parse_family_document(invoke({ "construct", "m2:n=4" }).out).copies.size() == 3);
        CHECK(parse_family_document(invoke({ "construct", "book:n=12,t=2,r=2" }).out).copies.size() == 15);

        r = invoke({ "construct", "blowup:f=C4,host=C5" });
        REQUIRE(r.code == exit_code::ok);
        CHECK(parse_family_document(r.out).n_host == 20);
        CHECK(r.err.find("cut edges 4") != std::string::npos);

        r = invoke({ "construct", "c4f2:n=8" });
        REQUIRE(r.code == exit_code::ok);
        CHECK(Json::parse(r.out)["red"].size() == 1);
        CHECK(r.err.find("F2-free") != std::string::npos);

        CHECK(invoke({ "construct", "bogus:n=3" }).code == exit_code::usage);
        CHECK(invoke({ "construct", "p4:n=2" }).code == exit_code::usage);
    }

    TEST_CASE("verify")
    {
        auto free_path = write_temp("m2", invoke({ "construct", "m2:n=4" }).out);
        auto r = invoke({ "verify", free_path, "--f", "M2" });
        CHECK(r.code == exit_code::ok);
        CHECK(Json::parse(r.out)["rainbow_free"] == true);

        // every triangle of K4: a rainbow triangle exists
        CopyFamily k4{ 4, named_graph("K3"), {}, false };
        for (int a = 0 ; a < 4 ; ++a)
            for (int b = a + 1 ; b < 4 ; ++b)
                for (int c = b + 1 ; c < 4 ; ++c)
                    k4.copies.push_back(Copy({ { a, b }, { a, c }, { b, c } }));
        auto rainbow_path = write_temp("k4", emit_family_document(k4));
        r = invoke({ "verify", rainbow_path, "--f", "K3" });
        CHECK(r.code == exit_code::rainbow_found);
        auto j = Json::parse(r.out);
        CHECK(j["rainbow_free"] == false);
        CHECK(j["witness"]["f_copy"].size() == 3);
        CHECK(j["witness"]["members"].size() == 3);

        CHECK(invoke({ "verify", rainbow_path, "--f", "K3", "--t", "2" }).code == exit_code::ok);

        auto bad_path = write_temp("bad", "{\"schema\": \"rtw/1\"");
        CHECK(invoke({ "verify", bad_path, "--f", "K3" }).code == exit_code::usage);
        CHECK(invoke({ "verify", "rtw_test_missing.json", "--f", "K3" }).code == exit_code::usage);

        for (auto p : { free_path, rainbow_path, bad_path })
            std::remove(p.c_str());
    }

    TEST_CASE("table")
    {
        auto values = [] (const std::string & csv) {
            std::vector<long> v;
            std::istringstream in(csv);
            std::string line;
            std::getline(in, line);
            CHECK(line == "n,h,f,value,status,certificate,nodes,seconds");
            while (std::getline(in, line)) {
                std::istringstream fields(line);
                std::string field;
                for (int i = 0 ; i < 4 ; ++i)
                    std::getline(fields, field, ',');
                v.push_back(std::stol(field));
            }
            return v;
        };

        auto r = invoke({ "table", "rb", "--h", "P4", "--f", "P4", "--n", "4..6" });
        CHECK(r.code == exit_code::ok);
        CHECK(values(r.out) == std::vector<long>{ 2, 2, 3 });

        r = invoke({ "table", "rb", "--h", "M2", "--f", "M2", "--n", "4..6" });
        CHECK(values(r.out) == std::vector<long>{ 3, 3, 3 });

        r = invoke({ "table", "ex", "--f", "K3", "--n", "3..7" });
        CHECK(values(r.out) == std::vector<long>{ 2, 4, 6, 9, 12 });

        r = invoke({ "table", "ex", "--f", "K3", "--n", "3..4", "--format", "json" });
        auto j = Json::parse(r.out);
        CHECK(j["rows"].size() == 2);
        CHECK(j["rows"][1]["value"] == 4);

        r = invoke({ "table", "rb", "--h", "K3", "--f", "K3", "--n", "4..8", "--max-nodes", "50" });
        CHECK(r.code == exit_code::lower_bound_only);
    }

    TEST_CASE("check")
    {
        for (auto & name : suite_names()) {
            CAPTURE(name);
            auto r = invoke({ "check", "--suite", name, "--seed", "3", "--trials", "20" });
            CHECK(r.code == exit_code::ok);
            CHECK(r.out.find("violations 0") != std::string::npos);
        }
        CHECK(invoke({ "check", "--suite", "nope" }).code == exit_code::usage);
    }
}
