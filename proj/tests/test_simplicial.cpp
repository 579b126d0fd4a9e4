#include <doctest.h>

#include "finhtop/errors.hpp"
#include "finhtop/homology.hpp"
#include "finhtop/random.hpp"
#include "finhtop/simplicial.hpp"
#include "finhtop/verify.hpp"
#include "oracle.hpp"

using namespace finhtop;

TEST_CASE("complex construction")
{
    const SimplicialComplex k({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "b", "c"}, {"a"}});
    CHECK(k.facets().size() == 1);
    CHECK(k.dimension() == 2);
    CHECK(k.simplex_count() == 7);
    CHECK_THROWS_AS(SimplicialComplex({"a", "b"}, {{"a"}}), InvalidComplex);
    CHECK_THROWS_AS(SimplicialComplex({"a"}, {{"z"}}), UnknownElement);
}

TEST_CASE("order complex of W has the chains of W")
{
    const FinitePoset w = w_poset();
    const SimplicialComplex k = order_complex(w);
    const auto chains = oracle::chains(oracle::order_matrix(w));
    const auto by_dim = k.simplices_by_dimension();
    REQUIRE(by_dim.size() == chains.size());
    for (std::size_t d = 0; d < chains.size(); ++d)
        CHECK(by_dim[d].size() == chains[d].size());
    CHECK(euler_characteristic(k) == oracle::chain_euler(w));
}

TEST_CASE("barycentric subdivision of a triangle")
{
    // frozen: 7 faces become 7 vertices, 12 edges and 6 triangles
    const SimplicialComplex sd = barycentric(full_simplex({"a", "b", "c"}));
    const auto by_dim = sd.simplices_by_dimension();
    REQUIRE(by_dim.size() == 3);
    CHECK(by_dim[0].size() == 7);
    CHECK(by_dim[1].size() == 12);
    CHECK(by_dim[2].size() == 6);
    CHECK(euler_characteristic(sd) == 1);
}

TEST_CASE("face poset and its opposite")
{
    const SimplicialComplex k = simplex_boundary({"a", "b", "c"});
    const FinitePoset x = face_poset(k);
    const FinitePoset xo = face_poset_op(k);
    CHECK(x.size() == 6);
    CHECK(xo == opposite(x));
    CHECK(poset_homology(x) == homology_profile(k));
}

TEST_CASE("random complexes: subdivision preserves homology and Euler characteristic")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const SimplicialComplex k = random_complex(2 + seed % 5, seed);
        const SimplicialComplex sd = barycentric(k);
        CHECK(euler_characteristic(sd) == euler_characteristic(k));
        CHECK(homology_profile(sd) == homology_profile(k));
        CHECK(oracle::rational_betti(k) == oracle::rational_betti(sd));
        CHECK(order_complex(face_poset(k)) == sd);
    }
}

TEST_CASE("simplicial maps and induced face poset maps")
{
    const SimplicialComplex edge = full_simplex({"a", "b"});
    const SimplicialComplex pt = full_simplex({"v"});
    const SimplicialMap f = SimplicialMap::from_assignment(edge, pt, {{"a", "v"}, {"b", "v"}});
    const PosetMap g = face_poset_op_map(f);
    CHECK(g.source().size() == 3);
    CHECK(g.target().size() == 1);
    CHECK(preimage_poset(g, pt.simplex_name({0})).size() == 3);
    const SimplicialComplex two_points({"a", "b"}, {{"a"}, {"b"}});
    CHECK_THROWS_AS(SimplicialMap::from_assignment(pt, two_points, {{"v", "z"}}), UnknownElement);
    const SimplicialMap split = SimplicialMap::from_assignment(edge, edge, {{"a", "b"}, {"b", "a"}});
    CHECK(compose(split, split) == identity_map(edge));
}

TEST_CASE("lifting diagrams of complexes")
{
    Rng rng(3);
    const FinitePoset index = chain_poset(3, "p");
    const ComplexDiagram d = random_complex_diagram(index, 3, rng);
    const PosetDiagram faces = lift_face_poset(d);
    const PosetDiagram faces_op = lift_face_poset_op(d);
    for (std::size_t p = 0; p < index.size(); ++p) {
        CHECK(faces.fiber(p) == face_poset(d.fiber(p)));
        CHECK(faces_op.fiber(p) == face_poset_op(d.fiber(p)));
    }
    const ComplexDiagram sd = barycentric_diagram(d);
    for (std::size_t p = 0; p < index.size(); ++p)
        CHECK(sd.fiber(p) == barycentric(d.fiber(p)));
}
