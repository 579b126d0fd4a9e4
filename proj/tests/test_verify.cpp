#include <doctest.h>

#include "finhtop/errors.hpp"
#include "finhtop/homology.hpp"
#include "finhtop/io.hpp"
#include "finhtop/random.hpp"
#include "finhtop/verify.hpp"

using namespace finhtop;

namespace {

bool all_beat(const RemovalSequence& seq)
{
    for (const auto& step : seq)
        if (step.kind != RemovalKind::UpBeat && step.kind != RemovalKind::DownBeat)
            return false;
    return true;
}

}  // namespace

TEST_CASE("fixed instances reach their expected outcomes")
{
    using H = HypothesisStatus;
    using C = ConclusionStatus;
    const std::vector<std::tuple<std::string, H, C>> expected = {
        {"maximum", H::Established, C::Verified},
        {"ubp", H::Established, C::Verified},
        {"maximum", H::Established, C::Verified},
        {"dbp", H::Established, C::Verified},
        {"dbp", H::NotEstablished, C::Skipped},
        {"dbpgen", H::NotEstablished, C::Skipped},
        {"dbpgen", H::Established, C::Verified},
        {"up-wp", H::Established, C::Verified},
        {"up-wp", H::NotEstablished, C::Skipped},
        {"homotopy", H::Established, C::Verified},
        {"cofinality", H::Established, C::Verified},
        {"cofinality", H::Established, C::Verified},
        {"thomason", H::Established, C::Verified},
        {"thomason", H::Established, C::Verified},
        {"barycentric", H::Established, C::Verified},
        {"index-contractible", H::Established, C::Verified},
        {"index-contractible", H::NotEstablished, C::Skipped},
        {"gamma-index", H::Established, C::Verified},
    };
    const auto reports = example_checks();
    REQUIRE(reports.size() == expected.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CAPTURE(i);
        CHECK(reports[i].theorem == std::get<0>(expected[i]));
        CHECK(reports[i].hypothesis == std::get<1>(expected[i]));
        CHECK(reports[i].conclusion == std::get<2>(expected[i]));
    }
}

TEST_CASE("cylinder onto a point collapses with beat points only")
{
    const PosetMap f = constant_map(circle_poset(), point_poset(), "*");
    const CheckReport r = check_maximum(cylinder_diagram(f));
    CHECK(r.conclusion == ConclusionStatus::Verified);
    const RemovalSequence* seq = r.sequence("collapse");
    REQUIRE(seq != nullptr);
    CHECK(seq->size() == 4);
    CHECK(all_beat(*seq));
}

TEST_CASE("unmet hypotheses are reported, not refuted")
{
    const FinitePoset circle = circle_poset();
    const FinitePoset two = chain_poset(2);
    // "1" is maximal in the index so it is not an up beat point
    const PosetDiagram d = constant_diagram(two, circle);
    const CheckReport ubp = check_ubp(d, "1");
    CHECK(ubp.hypothesis == HypothesisStatus::NotEstablished);
    CHECK(ubp.conclusion == ConclusionStatus::Skipped);
    CHECK_FALSE(ubp.hypothesis_reason.empty());
    CHECK_THROWS_AS(check_ubp(d, "nope"), UnknownElement);
}

TEST_CASE("W as index: not dismantlable, but reduced by gamma points")
{
    const FinitePoset w = w_poset();
    const SimplicialComplex triangle = simplex_boundary({"a", "b", "c"});
    std::vector<std::tuple<std::size_t, std::size_t, SimplicialMap>> identities;
    for (std::size_t p = 0; p < w.size(); ++p)
        for (std::size_t q : w.upper_covers(p))
            identities.emplace_back(p, q, identity_map(triangle));
    const ComplexDiagram d(w, std::vector<SimplicialComplex>(w.size(), triangle), identities);
    const CheckReport ic = check_index_contractible(d);
    CHECK(ic.hypothesis == HypothesisStatus::NotEstablished);
    const CheckReport gi = check_gamma_index(d);
    CHECK(gi.conclusion == ConclusionStatus::Verified);
    const HomologyProfile* h = gi.profile("hocolim");
    REQUIRE(h != nullptr);
    CHECK(*h == homology_profile(triangle));
}

TEST_CASE("cofinality over W into a point")
{
    const CheckReport r = check_cofinality(constant_map(w_poset(), point_poset(), "*"),
                                           constant_diagram(point_poset(), circle_poset()));
    CHECK(r.hypothesis == HypothesisStatus::Established);
    CHECK(r.conclusion == ConclusionStatus::Verified);
    const auto* a = r.profile("pullback");
    const auto* b = r.profile("hocolim");
    REQUIRE(a != nullptr);
    REQUIRE(b != nullptr);
    CHECK(*a == *b);
    CHECK(cofinality_poset(constant_map(w_poset(), point_poset(), "*")).size() == 12);
}

TEST_CASE("random checks are never refuted")
{
    for (const auto& id : theorem_ids()) {
        CAPTURE(id);
        const auto reports = run_random_checks(id, 15, 11);
        REQUIRE(reports.size() == 15);
        std::size_t verified = 0;
        for (const auto& r : reports) {
            CHECK(r.theorem == id);
            CHECK(r.conclusion != ConclusionStatus::Refuted);
            if (r.conclusion == ConclusionStatus::Verified)
                ++verified;
            if (r.hypothesis == HypothesisStatus::Established)
                CHECK(r.conclusion == ConclusionStatus::Verified);
        }
        CHECK(verified > 0);
    }
}

TEST_CASE("random checks are ordered by instance and independent of the job count")
{
    const auto serial = run_random_checks("thomason", 12, 3, {}, 1);
    const auto parallel = run_random_checks("thomason", 12, 3, {}, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(dump_json(to_json(serial[i])) == dump_json(to_json(parallel[i])));
        CHECK(dump_json(to_json(serial[i])) == dump_json(to_json(random_check("thomason", derive_seed(3, i)))));
    }
}

TEST_CASE("unknown theorem ids are rejected")
{
    CHECK_THROWS_AS(random_check("fermat", 0), std::invalid_argument);
}
