#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "finhtop/diagram.hpp"
#include "finhtop/poset.hpp"

namespace finhtop {

/// A simplex as a strictly increasing list of vertex positions.
using Simplex = std::vector<std::size_t>;

/**
 * Finite abstract simplicial complex stored by its facets (maximal simplices).
 * Membership is a subset-of-some-facet test.  Every vertex must lie in some
 * simplex.
 */
class SimplicialComplex {
public:
    /// The empty complex.
    SimplicialComplex() = default;

    /// `simplices` may be any generating family; non-maximal entries are dropped.
    SimplicialComplex(std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& simplices);

    static SimplicialComplex from_index_simplices(std::vector<std::string> vertices, std::vector<Simplex> simplices);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::string& vertex(std::size_t i) const { return vertices_.at(i); }
    std::size_t index_of(const std::string& v) const;
    std::optional<std::size_t> find(const std::string& v) const;

    /// Facets, each sorted, listed in lexicographic order.
    const std::vector<Simplex>& facets() const noexcept { return facets_; }

    /// -1 for the empty complex.
    int dimension() const noexcept;

    /// `simplex` must be sorted.
    bool contains(const Simplex& simplex) const;

    /// All simplices grouped by dimension, each group in lexicographic order.
    std::vector<std::vector<Simplex>> simplices_by_dimension() const;
    std::size_t simplex_count() const;

    /// "{a,b,c}" with vertex identifiers sorted as strings.
    std::string simplex_name(const Simplex& simplex) const;

    bool operator==(const SimplicialComplex& other) const
    {
        return vertices_ == other.vertices_ && facets_ == other.facets_;
    }
    bool operator!=(const SimplicialComplex& other) const { return !(*this == other); }

private:
    std::vector<std::string> vertices_;
    std::map<std::string, std::size_t> index_;
    std::vector<Simplex> facets_;
};

/// A vertex map sending every simplex onto a simplex of the target.
class SimplicialMap {
public:
    /// Throws NotSimplicial when some facet image is not a simplex of the target.
    SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<std::size_t> assignment);

    static SimplicialMap from_assignment(SimplicialComplex source, SimplicialComplex target,
                                         const std::map<std::string, std::string>& assignment);

    const SimplicialComplex& source() const noexcept { return source_; }
    const SimplicialComplex& target() const noexcept { return target_; }
    const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }
    std::size_t operator()(std::size_t v) const { return assignment_.at(v); }

    /// Sorted, deduplicated image of a simplex.
    Simplex image(const Simplex& simplex) const;

    std::map<std::string, std::string> as_map() const;

    bool operator==(const SimplicialMap& other) const
    {
        return assignment_ == other.assignment_ && source_ == other.source_ && target_ == other.target_;
    }
    bool operator!=(const SimplicialMap& other) const { return !(*this == other); }

private:
    SimplicialComplex source_;
    SimplicialComplex target_;
    std::vector<std::size_t> assignment_;
};

SimplicialMap identity_map(const SimplicialComplex& complex);
/// `second ∘ first`; throws DomainMismatch on a middle mismatch.
SimplicialMap compose(const SimplicialMap& first, const SimplicialMap& second);

/// Full simplex on the given vertices.
SimplicialComplex full_simplex(const std::vector<std::string>& vertices);
/// Boundary of the full simplex on the given vertices.
SimplicialComplex simplex_boundary(const std::vector<std::string>& vertices);

/// K(P): vertices are the elements, simplices the nonempty chains.  Throws EmptyPoset.
SimplicialComplex order_complex(const FinitePoset& poset);
/// Every nonempty chain of P, as sorted element positions, grouped by dimension.
std::vector<std::vector<Simplex>> poset_chains(const FinitePoset& poset);
SimplicialMap order_complex_map(const PosetMap& f);

/// X(K): simplices ordered by inclusion.  Throws EmptyComplex.
FinitePoset face_poset(const SimplicialComplex& complex);
/// X(K)^op: simplices ordered by reverse inclusion.
FinitePoset face_poset_op(const SimplicialComplex& complex);
/// σ ↦ f(σ) between face posets.
PosetMap face_poset_map(const SimplicialMap& f);
PosetMap face_poset_op_map(const SimplicialMap& f);

/// K' = K(X(K)); vertices are named after the simplices they subdivide.
SimplicialComplex barycentric(const SimplicialComplex& complex);
SimplicialMap barycentric_map(const SimplicialMap& f);

/// Euler characteristic by simplex count.
long long euler_characteristic(const SimplicialComplex& complex);

/// A P-diagram of finite simplicial complexes and simplicial maps.
class ComplexDiagram {
public:
    using CoverMaps = std::map<std::pair<std::string, std::string>, SimplicialMap>;

    ComplexDiagram(FinitePoset index, const std::map<std::string, SimplicialComplex>& fibers,
                   const CoverMaps& transitions);
    ComplexDiagram(FinitePoset index, std::vector<SimplicialComplex> fibers,
                   const std::vector<std::tuple<std::size_t, std::size_t, SimplicialMap>>& transitions);

    const FinitePoset& index() const noexcept { return index_; }
    const SimplicialComplex& fiber(std::size_t p) const { return fibers_.at(p); }
    const SimplicialComplex& fiber(const std::string& p) const { return fibers_.at(index_.index_of(p)); }
    const std::vector<SimplicialComplex>& fibers() const noexcept { return fibers_; }
    const SimplicialMap& transition(std::size_t p, std::size_t q) const;
    const SimplicialMap& transition(const std::string& p, const std::string& q) const;

private:
    void validate_and_close(std::vector<std::optional<SimplicialMap>> table);

    FinitePoset index_;
    std::vector<SimplicialComplex> fibers_;
    std::vector<std::optional<SimplicialMap>> transitions_;
};

/// Restriction of a complex diagram to an induced subposet of its index.
ComplexDiagram restrict(const ComplexDiagram& diagram, const Bits& kept);

/// Fiberwise K(-).
ComplexDiagram lift_order_complex(const PosetDiagram& diagram);
/// Fiberwise X(-).
PosetDiagram lift_face_poset(const ComplexDiagram& diagram);
/// Fiberwise X(-)^op.
PosetDiagram lift_face_poset_op(const ComplexDiagram& diagram);
/// Fiberwise barycentric subdivision of spaces and maps, K(X(-)).
ComplexDiagram barycentric_diagram(const ComplexDiagram& diagram);

/**
 * (X(f)^op)^{-1}(U_σ) for a map between opposite face posets: the simplices
 * of the source whose image contains σ, under reverse inclusion.
 */
FinitePoset preimage_poset(const PosetMap& face_op_map, const std::string& sigma);

}  // namespace finhtop
