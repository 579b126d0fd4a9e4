#include <doctest.h>

#include "finhtop/diagram.hpp"
#include "finhtop/errors.hpp"
#include "finhtop/homology.hpp"
#include "finhtop/random.hpp"
#include "finhtop/verify.hpp"
#include "oracle.hpp"

using namespace finhtop;

namespace {

/// Index a < b, a < c, b < d, c < d with a non-commuting square when `broken`.
PosetDiagram square(bool broken)
{
    const FinitePoset index({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
    const FinitePoset pt = point_poset();
    const FinitePoset two = antichain_poset(2, "t");
    return PosetDiagram(index, {{"a", pt}, {"b", pt}, {"c", pt}, {"d", two}},
                        {{{"a", "b"}, identity_map(pt)},
                         {{"a", "c"}, identity_map(pt)},
                         {{"b", "d"}, constant_map(pt, two, "t0")},
                         {{"c", "d"}, constant_map(pt, two, broken ? "t1" : "t0")}});
}

}  // namespace

TEST_CASE("functoriality is enforced")
{
    CHECK_NOTHROW(square(false));
    CHECK_THROWS_AS(square(true), FunctorialityError);
}

TEST_CASE("diagram validation errors")
{
    const FinitePoset two = chain_poset(2);
    const FinitePoset pt = point_poset();
    CHECK_THROWS_AS(PosetDiagram(two, {{"0", pt}}, {}), MissingFiber);
    CHECK_THROWS_AS(PosetDiagram(two, {{"0", pt}, {"1", pt}}, {}), MissingTransition);
    CHECK_THROWS_AS(PosetDiagram(two, {{"0", pt}, {"1", pt}}, {{{"1", "0"}, identity_map(pt)}}), DomainMismatch);
    const FinitePoset bad({"x::y"}, {});
    CHECK_THROWS_AS(constant_diagram(bad, pt), InvalidIdentifier);
}

TEST_CASE("hocolim matches the Grothendieck order on pairs")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const PosetDiagram d = random_diagram(1 + seed % 4, 4, seed);
        const FinitePoset h = hocolim(d);
        const auto offsets = hocolim_offsets(d);
        REQUIRE(h.size() == d.total_size());
        for (std::size_t p = 0; p < d.index().size(); ++p)
            for (std::size_t x = 0; x < d.fiber(p).size(); ++x) {
                CHECK(h.element(offsets[p] + x) == hocolim_name(d.index().element(p), d.fiber(p).element(x)));
                for (std::size_t q = 0; q < d.index().size(); ++q)
                    for (std::size_t y = 0; y < d.fiber(q).size(); ++y)
                        CHECK(h.leq(offsets[p] + x, offsets[q] + y) == oracle::hocolim_leq(d, p, x, q, y));
            }
    }
}

TEST_CASE("hocolim of a restriction is the subposet over the kept fibers")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const PosetDiagram d = random_diagram(2 + seed % 3, 3, seed);
        Rng rng(derive_seed(seed, 99));
        Bits kept(d.index().size());
        for (std::size_t p = 0; p < kept.size(); ++p)
            kept[p] = rng.chance(0.6);
        if (kept.none())
            kept.set(0);
        const auto offsets = hocolim_offsets(d);
        Bits members(d.total_size());
        for (std::size_t p = 0; p < kept.size(); ++p)
            if (kept[p])
                for (std::size_t x = 0; x < d.fiber(p).size(); ++x)
                    members.set(offsets[p] + x);
        CHECK(hocolim(restrict(d, kept)) == subposet(hocolim(d), members));
    }
}

TEST_CASE("constant diagram over a point has the fiber as hocolim")
{
    const FinitePoset w = w_poset();
    const FinitePoset h = hocolim(constant_diagram(point_poset("p"), w));
    CHECK(h.size() == 11);
    CHECK(is_isomorphic(h, w));
}

TEST_CASE("mapping cylinder")
{
    const FinitePoset circle = circle_poset();
    const FinitePoset b = mapping_cylinder(identity_map(circle));
    CHECK(b.size() == 8);
    CHECK(b.leq("0::a", "1::a"));
    CHECK(b.leq("0::a", "1::c"));
    CHECK_FALSE(b.leq("1::a", "0::a"));
    CHECK(poset_homology(b) == poset_homology(circle));
}

TEST_CASE("pushout of two points along the circle is a sphere")
{
    // frozen from the prime-field oracle: b0 = 1, b1 = 0, b2 = 1
    const FinitePoset index({"l", "m", "r"}, {{"m", "l"}, {"m", "r"}});
    const FinitePoset pt = point_poset();
    const FinitePoset circle = circle_poset();
    const PosetDiagram d(index, {{"l", pt}, {"m", circle}, {"r", pt}},
                         {{{"m", "l"}, constant_map(circle, pt, "*")}, {{"m", "r"}, constant_map(circle, pt, "*")}});
    const FinitePoset h = hocolim(d);
    CHECK(h.size() == 6);
    CHECK(oracle::rational_betti(h) == std::vector<std::size_t>{1, 0, 1});
    const HomologyProfile profile = poset_homology(h);
    CHECK(profile.betti(0) == 1);
    CHECK(profile.betti(1) == 0);
    CHECK(profile.betti(2) == 1);
    CHECK(profile.torsion(1).empty());
}

TEST_CASE("pullback and canonical map")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        const PosetDiagram d = random_diagram(random_poset(1 + rng.below(4), 0.5, rng, "p"), 3, rng);
        const FinitePoset q = random_poset(1 + rng.below(4), 0.5, rng, "q");
        const PosetMap phi = random_map(q, d.index(), rng);
        const PosetDiagram pulled = pullback(phi, d);
        CHECK(pulled.index() == q);
        const PosetMap c = canonical_map(phi, d);  // validated as order preserving on construction
        CHECK(c.source().size() == pulled.total_size());
    }
    const PosetDiagram d = random_diagram(3, 3, 5);
    CHECK(canonical_map(identity_map(d.index()), d) == identity_map(hocolim(d)));
}
