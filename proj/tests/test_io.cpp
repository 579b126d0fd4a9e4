#include <doctest.h>

#include "finhtop/errors.hpp"
#include "finhtop/io.hpp"
#include "finhtop/random.hpp"
#include "finhtop/verify.hpp"

using namespace finhtop;

TEST_CASE("poset JSON round trip")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const FinitePoset p = random_poset(1 + seed % 9, 0.4, seed);
        const Json j = to_json(p);
        CHECK(poset_from_json(j) == p);
        CHECK(to_json(poset_from_json(parse_json(dump_json(j)))) == j);
    }
}

TEST_CASE("diagram and complex JSON round trip")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const PosetDiagram d = random_diagram(1 + seed % 4, 3, seed);
        CHECK(poset_diagram_from_json(parse_json(dump_json(to_json(d)))) == d);
        const SimplicialComplex k = random_complex(2 + seed % 4, seed);
        CHECK(complex_from_json(to_json(k)) == k);
        Rng rng(seed);
        const ComplexDiagram cd = random_complex_diagram(chain_poset(2, "p"), 3, rng);
        const Json cj = to_json(cd);
        CHECK(is_complex_diagram_json(cj));
        CHECK_FALSE(is_complex_diagram_json(to_json(d)));
        CHECK(to_json(complex_diagram_from_json(cj)) == cj);
    }
}

TEST_CASE("maps, morphisms, sequences and profiles round trip")
{
    const FinitePoset c = chain_poset(3);
    const PosetMap f = new_map(c, c, {{"0", "0"}, {"1", "2"}, {"2", "2"}});
    CHECK(poset_map_from_json(to_json(f)) == f);

    const DiagramMorphism m = product_projection(random_diagram(2, 2, 4), chain_poset(2));
    CHECK(to_json(morphism_from_json(to_json(m))) == to_json(m));

    const RemovalSequence seq{{"a", RemovalKind::UpBeat}, {"b", RemovalKind::GammaDown}};
    CHECK(sequence_from_json(to_json(seq)) == seq);
    CHECK(to_json(seq).dump() == R"([{"element":"a","kind":"up-beat"},{"element":"b","kind":"gamma-down"}])");

    HomologyProfile h;
    h.degrees = {{1, {}}, {0, {BigInt(2)}}, {0, {BigInt("123456789012345678901234567890")}}};
    CHECK(profile_from_json(to_json(h)) == h);
}

TEST_CASE("reports round trip")
{
    for (const auto& r : example_checks()) {
        const Json j = to_json(r);
        CHECK(to_json(report_from_json(parse_json(dump_json(j)))) == j);
    }
    const Json j = to_json(example_checks().front());
    CHECK(j["theorem"] == "maximum");
    CHECK(j["conclusion"]["status"] == "verified");
    CHECK(j["hypothesis"]["status"] == "established");
    CHECK_FALSE(j.contains("seconds"));
}

TEST_CASE("malformed input is rejected")
{
    CHECK_THROWS_AS(parse_json("{"), ParseError);
    CHECK_THROWS_AS(poset_from_json(parse_json(R"({"elements": ["a"]})")), ParseError);
    CHECK_THROWS_AS(poset_from_json(parse_json(R"({"elements": ["a", "b"], "relations": [["a", "b"], ["b", "a"]]})")),
                    CycleError);
    CHECK_THROWS_AS(poset_from_json(parse_json(R"({"elements": [1], "relations": []})")), ParseError);
    CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
    CHECK_THROWS_AS(sequence_from_json(parse_json(R"([{"element": "a", "kind": "sideways"}])")), ParseError);
}

TEST_CASE("DOT export draws covers ranked by height")
{
    const std::string dot = to_dot(chain_poset(2));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("\"0\" -> \"1\"") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
}
