#include <doctest.h>

#include <algorithm>

#include "finhtop/homology.hpp"
#include "finhtop/random.hpp"
#include "finhtop/simplicial.hpp"
#include "finhtop/verify.hpp"
#include "oracle.hpp"

using namespace finhtop;

namespace {

/// Six-vertex projective plane.
SimplicialComplex projective_plane()
{
    return SimplicialComplex({"1", "2", "3", "4", "5", "6"},
                             {{"1", "2", "4"}, {"1", "2", "6"}, {"1", "3", "5"}, {"1", "3", "6"}, {"1", "4", "5"},
                              {"2", "3", "4"}, {"2", "3", "5"}, {"2", "5", "6"}, {"3", "4", "6"}, {"4", "5", "6"}});
}

std::vector<std::size_t> bettis(const HomologyProfile& h)
{
    std::vector<std::size_t> out;
    for (const auto& d : h.degrees)
        out.push_back(d.betti);
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

}  // namespace

TEST_CASE("Smith normal form of small matrices")
{
    CHECK(smith_normal_form(IntegerMatrix::from_dense({{2, 4}, {6, 8}})) == std::vector<BigInt>{2, 4});
    CHECK(smith_normal_form(IntegerMatrix::from_dense({{0, 0}, {0, 0}})).empty());
    CHECK(smith_normal_form(IntegerMatrix::from_dense({{2, 0}, {0, 3}})) == std::vector<BigInt>{1, 6});
}

TEST_CASE("Smith normal form falls back to big integers")
{
    const long long big = 4000000007LL;  // square exceeds int64
    const auto d = smith_normal_form(IntegerMatrix::from_dense({{big, 0}, {0, big}}));
    REQUIRE(d.size() == 2);
    CHECK(d[1] == BigInt(big));
    const auto e = smith_normal_form(IntegerMatrix::from_dense({{big, 1}, {0, big}}));
    REQUIRE(e.size() == 2);
    CHECK(e[0] == 1);
    CHECK(e[1] == BigInt(big) * BigInt(big));
}

TEST_CASE("frozen profiles")
{
    const HomologyProfile circle = poset_homology(circle_poset());
    CHECK(bettis(circle) == std::vector<std::size_t>{1, 1});
    CHECK(format_profile(circle) == "H_0 = Z^1\nH_1 = Z^1\n");

    const HomologyProfile w = poset_homology(w_poset());
    CHECK(w == point_profile());
    CHECK(w.is_acyclic());

    const HomologyProfile rp2 = homology_profile(projective_plane());
    CHECK(rp2.betti(0) == 1);
    CHECK(rp2.betti(1) == 0);
    CHECK(rp2.torsion(1) == std::vector<BigInt>{2});
    CHECK(rp2.betti(2) == 0);
    CHECK(format_profile(rp2) == "H_0 = Z^1\nH_1 = Z/2\n");
    // over the two-element field the torsion shows up in degrees 1 and 2
    CHECK(oracle::betti_mod(oracle::faces(projective_plane().facets()), 2) == std::vector<std::size_t>{1, 1, 1});
    CHECK(oracle::rational_betti(projective_plane()) == std::vector<std::size_t>{1});

    const HomologyProfile sphere = homology_profile(simplex_boundary({"a", "b", "c", "d"}));
    CHECK(bettis(sphere) == std::vector<std::size_t>{1, 0, 1});
}

TEST_CASE("random posets: Betti numbers agree with the prime-field oracle")
{
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const FinitePoset p = random_poset(1 + seed % 10, 0.3 + 0.05 * static_cast<double>(seed % 7), seed);
        const HomologyProfile h = poset_homology(p);
        CHECK(bettis(h) == oracle::rational_betti(p));
        CHECK(h.euler_characteristic() == oracle::chain_euler(p));
        // no torsion means the mod 2 Betti numbers equal the rational ones
        bool torsion_free = true;
        for (const auto& d : h.degrees)
            torsion_free = torsion_free && d.torsion.empty();
        if (torsion_free)
            CHECK(oracle::betti_mod(oracle::chains(oracle::order_matrix(p)), 2) == oracle::rational_betti(p));
    }
}

TEST_CASE("homology is invariant under relabeling")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const FinitePoset p = random_poset(2 + seed % 8, 0.4, seed);
        std::vector<std::string> names = p.elements();
        std::vector<Relation> covers;
        for (const auto& [x, y] : p.covers())
            covers.push_back({"z" + x, "z" + y});
        for (auto& n : names)
            n = "z" + n;
        std::reverse(names.begin(), names.end());
        CHECK(poset_homology(new_poset(names, covers)) == poset_homology(p));
        CHECK(poset_homology(opposite(p)) == poset_homology(p));
    }
}

TEST_CASE("relative homology and homology isomorphisms")
{
    const FinitePoset circle = circle_poset();
    const FinitePoset pt = point_poset();
    CHECK(induces_homology_isomorphism(identity_map(circle)));
    CHECK_FALSE(induces_homology_isomorphism(constant_map(circle, pt, "*")));
    CHECK(induces_homology_isomorphism(constant_map(w_poset(), pt, "*")));
    Bits all(circle.size());
    all.set();
    CHECK(relative_poset_homology(circle, all).degrees.empty());
    Bits one(circle.size());
    one.set(0);
    const HomologyProfile rel = relative_poset_homology(circle, one);
    CHECK(rel.betti(0) == 0);
    CHECK(rel.betti(1) == 1);
}
