#include <doctest.h>

#include <algorithm>

#include "finhtop/errors.hpp"
#include "finhtop/poset.hpp"
#include "finhtop/random.hpp"
#include "finhtop/verify.hpp"

using namespace finhtop;

TEST_CASE("new_poset closes and reduces the relation")
{
    const FinitePoset p = new_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(p.leq("a", "c"));
    CHECK_FALSE(p.leq("c", "a"));
    CHECK(p.cover_count() == 2);
    CHECK(p.covers() == std::vector<Relation>{{"a", "b"}, {"b", "c"}});
}

TEST_CASE("construction errors")
{
    CHECK_THROWS_AS(new_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
    CHECK_THROWS_AS(new_poset({"a", "a"}, {}), DuplicateElement);
    CHECK_THROWS_AS(new_poset({"a"}, {{"a", "z"}}), UnknownElement);
    CHECK_THROWS_AS(new_poset({""}, {}), InvalidIdentifier);
}

TEST_CASE("up and down sets of W")
{
    const FinitePoset w = w_poset();
    REQUIRE(w.size() == 11);
    CHECK(strict_down_set(w, "9").elements() == std::vector<std::string>{"1", "2", "3", "5", "6"});
    CHECK(strict_up_set(w, "1").size() == 4);
    CHECK(up_set(w, "1").size() == 5);
    CHECK(down_set(w, "10").size() == 9);
    CHECK(maximal_elements(w).size() == 3);
    CHECK(minimal_elements(w).size() == 4);
    CHECK_FALSE(maximum(w).has_value());
}

TEST_CASE("linear extension is the lexicographically smallest Kahn order")
{
    const FinitePoset p = new_poset({"d", "c", "b", "a"}, {{"d", "a"}, {"c", "b"}});
    CHECK(linear_extension(p) == std::vector<std::string>{"c", "b", "d", "a"});
    CHECK(linear_extension(chain_poset(3)) == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("random posets: linear extensions respect the order and opposite is an involution")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const FinitePoset p = random_poset(1 + seed % 9, 0.35, seed);
        const auto ext = linear_extension_indices(p);
        std::vector<std::size_t> position(p.size());
        for (std::size_t i = 0; i < ext.size(); ++i)
            position[ext[i]] = i;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j)
                if (p.less(i, j))
                    CHECK(position[i] < position[j]);
        CHECK(opposite(opposite(p)) == p);
        // covers regenerate the same order
        CHECK(new_poset(p.elements(), p.covers()) == p);
        // transitivity and antisymmetry of the stored order
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (i != j && p.leq(i, j))
                    CHECK_FALSE(p.leq(j, i));
                for (std::size_t k = 0; k < p.size(); ++k)
                    if (p.leq(i, j) && p.leq(j, k))
                        CHECK(p.leq(i, k));
            }
    }
}

TEST_CASE("product order is componentwise")
{
    const FinitePoset p = product(chain_poset(2), antichain_poset(2, "a"));
    REQUIRE(p.size() == 4);
    CHECK(p.leq("(0,a0)", "(1,a0)"));
    CHECK_FALSE(p.leq("(0,a0)", "(1,a1)"));
}

TEST_CASE("isomorphism")
{
    const FinitePoset w = w_poset();
    std::vector<std::string> renamed;
    for (const auto& x : w.elements())
        renamed.push_back("r" + x);
    std::vector<Relation> covers;
    for (const auto& [x, y] : w.covers())
        covers.push_back({"r" + x, "r" + y});
    std::reverse(renamed.begin(), renamed.end());
    CHECK(is_isomorphic(w, new_poset(renamed, covers)));
    CHECK_FALSE(is_isomorphic(w, opposite(w)));
    CHECK_FALSE(is_isomorphic(chain_poset(3), antichain_poset(3)));
    CHECK_THROWS_AS(is_isomorphic(chain_poset(17), chain_poset(17)), SizeLimitExceeded);
}

TEST_CASE("poset maps")
{
    const FinitePoset c = chain_poset(3);
    const FinitePoset pt = point_poset();
    CHECK_THROWS_AS(new_map(c, c, {{"0", "2"}, {"1", "1"}, {"2", "0"}}), NotOrderPreserving);
    CHECK_THROWS_AS(new_map(c, c, {{"0", "0"}}), DomainMismatch);
    const PosetMap k = constant_map(c, pt, "*");
    CHECK(compose(identity_map(c), k) == k);
    CHECK(preimage(k, std::vector<std::string>{"*"}).size() == 3);
    CHECK_THROWS_AS(compose(k, identity_map(c)), DomainMismatch);
}

TEST_CASE("random maps are order preserving")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        const FinitePoset a = random_poset(1 + rng.below(6), 0.4, rng, "a");
        const FinitePoset b = random_poset(1 + rng.below(6), 0.4, rng, "b");
        const PosetMap f = random_map(a, b, rng);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j)
                if (a.leq(i, j))
                    CHECK(b.leq(f(i), f(j)));
    }
}
