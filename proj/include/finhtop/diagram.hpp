#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "finhtop/poset.hpp"

namespace finhtop {

/// Separator between index and fiber identifiers in hocolim elements.
inline constexpr const char* kFiberSeparator = "::";

/**
 * A functor from a finite poset P (the index) to finite posets: a nonempty
 * fiber X_p per index element and a transition f_pq : X_p -> X_q per pair
 * p <= q, with f_pp = id and f_qr ∘ f_pq = f_pr.
 *
 * Transitions are supplied on cover pairs; composites for the remaining
 * comparable pairs are synthesized and checked for path independence.
 */
class PosetDiagram {
public:
    using CoverMaps = std::map<std::pair<std::string, std::string>, PosetMap>;

    PosetDiagram(FinitePoset index, const std::map<std::string, FinitePoset>& fibers, const CoverMaps& transitions);

    /// Index-based form: fibers in index order; transitions as (p, q, f) on at least every cover.
    PosetDiagram(FinitePoset index, std::vector<FinitePoset> fibers,
                 const std::vector<std::tuple<std::size_t, std::size_t, PosetMap>>& transitions);

    const FinitePoset& index() const noexcept { return index_; }
    const FinitePoset& fiber(std::size_t p) const { return fibers_.at(p); }
    const FinitePoset& fiber(const std::string& p) const { return fibers_.at(index_.index_of(p)); }
    const std::vector<FinitePoset>& fibers() const noexcept { return fibers_; }

    /// f_pq for p <= q; throws DomainMismatch when p and q are not comparable that way.
    const PosetMap& transition(std::size_t p, std::size_t q) const;
    const PosetMap& transition(const std::string& p, const std::string& q) const;

    /// Sum of the fiber sizes, i.e. the size of the hocolim.
    std::size_t total_size() const;

    bool operator==(const PosetDiagram& other) const;
    bool operator!=(const PosetDiagram& other) const { return !(*this == other); }

private:
    void validate_and_close(std::vector<std::optional<PosetMap>> table);

    FinitePoset index_;
    std::vector<FinitePoset> fibers_;
    std::vector<std::optional<PosetMap>> transitions_;  // row-major n*n, present iff p <= q
};

/// Fiber-preserving family α_p : X_p -> Y_p commuting with the transitions.
class DiagramMorphism {
public:
    /// Throws DomainMismatch (different index or fiber) or NotNatural.
    DiagramMorphism(PosetDiagram source, PosetDiagram target, std::vector<PosetMap> components);

    const PosetDiagram& source() const noexcept { return source_; }
    const PosetDiagram& target() const noexcept { return target_; }
    const PosetMap& component(std::size_t p) const { return components_.at(p); }
    const std::vector<PosetMap>& components() const noexcept { return components_; }

private:
    PosetDiagram source_;
    PosetDiagram target_;
    std::vector<PosetMap> components_;
};

PosetDiagram new_diagram(FinitePoset index, const std::map<std::string, FinitePoset>& fibers,
                         const PosetDiagram::CoverMaps& transitions);

/// Every fiber equal to `fiber`, every transition the identity.
PosetDiagram constant_diagram(const FinitePoset& index, const FinitePoset& fiber);

/// Name of the hocolim element for x in X_p.
std::string hocolim_name(const std::string& p, const std::string& x);

/// Position of the first element of each fiber inside hocolim(D).
std::vector<std::size_t> hocolim_offsets(const PosetDiagram& diagram);

/**
 * The non-Hausdorff homotopy colimit (Grothendieck construction): the
 * disjoint union of the fibers, "p::x", with (p,x) <= (q,y) iff p <= q and
 * f_pq(x) <= y.  Elements are listed fiber by fiber in index order.
 */
FinitePoset hocolim(const PosetDiagram& diagram);

/// Diagram over the induced subposet of the index on `kept`.
PosetDiagram restrict(const PosetDiagram& diagram, const Bits& kept);
PosetDiagram restrict(const PosetDiagram& diagram, const std::vector<std::string>& kept);

/// φ*X = X ∘ φ for φ : P -> Q and a Q-diagram X.
PosetDiagram pullback(const PosetMap& phi, const PosetDiagram& diagram);

/// hocolim φ*X -> hocolim X, (p, x) ↦ (φ(p), x).
PosetMap canonical_map(const PosetMap& phi, const PosetDiagram& diagram);

/// The diagram X_0 -> X_1 over the chain 0 < 1 (index elements "0", "1").
PosetDiagram cylinder_diagram(const PosetMap& f);

/// Non-Hausdorff mapping cylinder B_f = hocolim of `cylinder_diagram(f)`.
FinitePoset mapping_cylinder(const PosetMap& f);

}  // namespace finhtop
