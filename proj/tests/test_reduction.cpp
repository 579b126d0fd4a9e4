#include <doctest.h>

#include <algorithm>

#include "finhtop/errors.hpp"
#include "finhtop/homology.hpp"
#include "finhtop/random.hpp"
#include "finhtop/reduction.hpp"
#include "finhtop/verify.hpp"
#include "oracle.hpp"

using namespace finhtop;

TEST_CASE("beat points")
{
    const FinitePoset c = chain_poset(3);
    CHECK(is_up_beat(c, "0"));
    CHECK(is_down_beat(c, "2"));
    const FinitePoset circle = circle_poset();
    for (const auto& x : circle.elements()) {
        CHECK_FALSE(is_up_beat(circle, x));
        CHECK_FALSE(is_down_beat(circle, x));
    }
    CHECK_THROWS_AS(is_up_beat(c, "9"), UnknownElement);
}

TEST_CASE("W is a core that collapses")
{
    const FinitePoset w = w_poset();
    const CoreResult result = core(w);
    CHECK(result.core.size() == 11);
    CHECK(result.steps.empty());
    CHECK_FALSE(is_contractible(w));
    CHECK(is_down_weak(w, "9"));
    CHECK(is_down_weak(w, "11"));
    CHECK_FALSE(is_down_weak(w, "10"));

    const CollapseResult collapse = collapse_search(w);
    REQUIRE(collapse.found());
    CHECK(collapse.sequence->size() == 10);
    CHECK(verify_removal_sequence(w, *collapse.sequence));
    const auto left = replay_removal_sequence(w, *collapse.sequence);
    REQUIRE(left.has_value());
    CHECK(left->size() == 1);

    const Triviality t = triviality_oracle(w);
    CHECK(t.verdict == Verdict::Trivial);
}

TEST_CASE("the circle is a core that does not collapse")
{
    const FinitePoset circle = circle_poset();
    CHECK(core(circle).core.size() == 4);
    const CollapseResult collapse = collapse_search(circle);
    CHECK_FALSE(collapse.found());
    CHECK(collapse.exhausted);
    const Triviality t = triviality_oracle(circle);
    CHECK(t.verdict == Verdict::NonTrivial);
    REQUIRE(t.certificate.has_value());
    CHECK(t.certificate->betti(1) == 1);
    CHECK(triviality_oracle(antichain_poset(2)).verdict == Verdict::NonTrivial);
}

TEST_CASE("random posets: core agrees with the naive oracle and is idempotent")
{
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const FinitePoset p = random_poset(1 + seed % 11, 0.35, seed);
        const CoreResult c = core(p);
        CHECK(is_contractible(p) == oracle::dismantlable(p));
        CHECK(is_contractible(p) == (c.core.size() == 1));
        CHECK(core(c.core).core == c.core);
        CHECK(poset_homology(c.core) == poset_homology(p));
        CHECK(verify_removal_sequence(p, c.steps));

        // cores from different scan orders are isomorphic
        auto order = p.elements();
        std::reverse(order.begin(), order.end());
        const CoreResult other = core(p, order);
        CHECK(other.core.size() == c.core.size());
        if (c.core.size() <= kDefaultIsomorphismLimit)
            CHECK(is_isomorphic(other.core, c.core));
    }
}

TEST_CASE("weak points have dismantlable strict sets")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const FinitePoset p = random_poset(2 + seed % 9, 0.4, seed);
        for (const auto& x : p.elements()) {
            const FinitePoset below = strict_down_set(p, x);
            const FinitePoset above = strict_up_set(p, x);
            CHECK(is_down_weak(p, x) == (!below.empty() && oracle::dismantlable(below)));
            CHECK(is_up_weak(p, x) == (!above.empty() && oracle::dismantlable(above)));
            if (is_down_weak(p, x) || is_up_weak(p, x))
                CHECK(poset_homology(remove_elements(p, {x})) == poset_homology(p));
        }
    }
}

TEST_CASE("the oracle agrees with homology and contractibility")
{
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const FinitePoset p = random_poset(1 + seed % 12, 0.3, seed);
        const Triviality t = triviality_oracle(p);
        const HomologyProfile h = poset_homology(p);
        if (t.verdict == Verdict::Trivial) {
            CHECK(h.is_acyclic());
            const auto left = replay_removal_sequence(p, t.reduction);
            REQUIRE(left.has_value());
            CHECK(oracle::dismantlable(*left));
        }
        if (t.verdict == Verdict::NonTrivial) {
            CHECK_FALSE(oracle::dismantlable(p));
            CHECK_FALSE(collapse_search(p).found());
        }
        if (oracle::dismantlable(p))
            CHECK(t.verdict == Verdict::Trivial);
        if (!h.is_acyclic())
            CHECK(t.verdict == Verdict::NonTrivial);
    }
}

TEST_CASE("gamma points")
{
    // adjoining a point below a copy of W: its strict up-set is W, trivial but not dismantlable
    const FinitePoset w = w_poset();
    std::vector<std::string> elements = w.elements();
    elements.push_back("u");
    std::vector<Relation> relations = w.covers();
    for (const auto& x : {"1", "2", "3", "4"})
        relations.push_back({"u", x});
    const FinitePoset p = new_poset(elements, relations);
    CHECK_FALSE(is_up_weak(p, "u"));
    const Triviality g = is_gamma_point(p, "u");
    CHECK(g.verdict == Verdict::Trivial);
    CHECK(g.reason == "up");
    CHECK(verify_removal_sequence(p, {{"u", RemovalKind::GammaUp}}));
    CHECK_FALSE(verify_removal_sequence(p, {{"u", RemovalKind::UpWeak}}));

    // a point over the circle is not a gamma point
    const FinitePoset circle = circle_poset();
    std::vector<std::string> ce = circle.elements();
    ce.push_back("t");
    std::vector<Relation> cr = circle.covers();
    cr.push_back({"c", "t"});
    cr.push_back({"d", "t"});
    const FinitePoset cone = new_poset(ce, cr);
    CHECK(is_gamma_point(cone, "t").verdict == Verdict::NonTrivial);
}

TEST_CASE("removal kinds round-trip through their names")
{
    for (auto kind : {RemovalKind::UpBeat, RemovalKind::DownBeat, RemovalKind::UpWeak, RemovalKind::DownWeak,
                      RemovalKind::GammaUp, RemovalKind::GammaDown})
        CHECK(parse_removal_kind(to_string(kind)) == kind);
    CHECK_FALSE(parse_removal_kind("sideways").has_value());
}

TEST_CASE("budget exhaustion yields Unknown rather than a verdict")
{
    ReductionBudget tiny;
    tiny.states = 1;
    const Triviality t = triviality_oracle(w_poset(), tiny);
    CHECK(t.verdict == Verdict::Unknown);
    const CollapseResult c = collapse_search(w_poset(), 1);
    CHECK_FALSE(c.found());
    CHECK_FALSE(c.exhausted);
}
