#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "finhtop/cli.hpp"
#include "finhtop/io.hpp"

using namespace finhtop;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FINHTOP_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("poset subcommands")
{
    auto r = run_cli({"poset", "contractible", data("chain3.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");
    CHECK(run_cli({"poset", "contractible", data("w.json")}).out == "false\n");

    r = run_cli({"poset", "homology", data("circle.json")});
    CHECK(r.code == 0);
    CHECK(r.out == "H_0 = Z^1\nH_1 = Z^1\n");

    r = run_cli({"--format", "json", "poset", "core", data("w.json")});
    CHECK(r.code == 0);
    const Json j = parse_json(r.out);
    CHECK(j["core"]["elements"].size() == 11);
    CHECK(j["steps"].empty());

    r = run_cli({"poset", "export-dot", data("chain3.json")});
    CHECK(r.out.find("digraph") != std::string::npos);
    r = run_cli({"--format", "json", "poset", "ordercomplex", data("chain3.json")});
    CHECK(parse_json(r.out)["facets"].size() == 1);

    r = run_cli({"poset", "collapse", data("w.json")});
    CHECK(r.out.rfind("collapsible\n", 0) == 0);
    r = run_cli({"poset", "trivial", data("circle.json")});
    CHECK(r.out.rfind("nontrivial", 0) == 0);
}

TEST_CASE("complex and diagram subcommands")
{
    auto r = run_cli({"complex", "homology", data("triangle.json")});
    CHECK(r.out == "H_0 = Z^1\nH_1 = Z^1\n");
    r = run_cli({"--format", "json", "complex", "faceposet", data("triangle.json")});
    CHECK(parse_json(r.out)["elements"].size() == 6);
    r = run_cli({"--format", "json", "complex", "sd", data("triangle.json")});
    CHECK(parse_json(r.out)["vertices"].size() == 6);

    r = run_cli({"--format", "json", "diagram", "hocolim", data("sphere_pushout.json")});
    CHECK(r.code == 0);
    const FinitePoset h = poset_from_json(parse_json(r.out));
    CHECK(h.size() == 6);
    r = run_cli({"--format", "json", "diagram", "cylinder", data("circle_to_point.json")});
    CHECK(poset_from_json(parse_json(r.out)).size() == 5);
    r = run_cli({"--format", "json", "diagram", "restrict", data("sphere_pushout.json"), "--keep", "m,l"});
    CHECK(r.code == 0);
    CHECK(parse_json(r.out)["index"]["elements"].size() == 2);
}

TEST_CASE("check subcommand")
{
    auto r = run_cli({"check", "maximum", "--input", data("cyl_s1_pt.json")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("maximum: verified", 0) == 0);

    r = run_cli({"--format", "json", "check", "ubp", "--input", data("cyl_s1_pt.json"), "--p", "0"});
    CHECK(r.code == 0);
    CHECK(parse_json(r.out)["conclusion"]["status"] == "verified");

    r = run_cli({"check", "thomason", "--random", "50", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("summary: 50 verified, 0 refuted, 0 skipped") != std::string::npos);

    r = run_cli({"check", "index-contractible", "--input", data("triangle_over_chain.json")});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("index-contractible: verified", 0) == 0);
}

TEST_CASE("JSON output is deterministic and re-parses")
{
    const std::vector<std::string> args{"--format", "json", "--seed", "5", "check", "dbpgen", "--random", "6"};
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const Json j = parse_json(a.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 6);
    for (const auto& r : j)
        CHECK(to_json(report_from_json(r)) == r);
}

TEST_CASE("errors exit with status 2")
{
    CHECK(run_cli({"poset", "contractible", data("cycle.json")}).code == 2);
    CHECK(run_cli({"poset", "contractible", data("missing.json")}).code == 2);
    CHECK(run_cli({"poset", "frobnicate"}).code == 2);
    CHECK(run_cli({"--bogus", "poset", "core", data("w.json")}).code == 2);
    CHECK(run_cli({"check", "fermat"}).code == 2);
    CHECK(run_cli({"check", "ubp", "--input", data("cyl_s1_pt.json")}).code == 2);
    CHECK(run_cli({}).code == 2);
    const auto r = run_cli({"poset", "contractible", data("cycle.json")});
    CHECK(r.err.find("cycle") != std::string::npos);
}

TEST_CASE("budget comes from the flag, then the environment")
{
    setenv(kBudgetEnv, "1", 1);
    CHECK(run_cli({"poset", "collapse", data("w.json")}).out.rfind("undecided", 0) == 0);
    CHECK(run_cli({"--budget", "100000", "poset", "collapse", data("w.json")}).out.rfind("collapsible", 0) == 0);
    setenv(kBudgetEnv, "lots", 1);
    CHECK(run_cli({"poset", "collapse", data("w.json")}).code == 2);
    unsetenv(kBudgetEnv);
    CHECK(run_cli({"poset", "collapse", data("w.json")}).out.rfind("collapsible", 0) == 0);
}

TEST_CASE("help exits cleanly")
{
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("check") != std::string::npos);
}
