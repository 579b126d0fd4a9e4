#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace finhtop {

/// Dense row of a reachability matrix, also used for subsets of a poset.
using Bits = boost::dynamic_bitset<std::uint64_t>;

using Relation = std::pair<std::string, std::string>;

/**
 * A finite partially ordered set, read as a finite T0 topological space whose
 * open sets are the down-sets.
 *
 * Elements are opaque string identifiers kept in insertion order.  The order
 * is stored twice: as the cover relation (the Hasse diagram) and as a dense
 * reachability matrix, so `leq` is a bit lookup.  Values are immutable and
 * cheap to copy; copies share the underlying storage.
 */
class FinitePoset {
public:
    /// The empty poset.
    FinitePoset();

    /**
     * Build a poset from any acyclic relation.  The relation is closed
     * reflexively and transitively, then reduced to its covers.
     *
     * Throws DuplicateElement, InvalidIdentifier, UnknownElement or
     * CycleError.
     */
    FinitePoset(std::vector<std::string> elements, const std::vector<Relation>& relations);

    /// Build from index pairs (i, j) meaning element i <= element j.
    static FinitePoset from_index_relations(std::vector<std::string> elements,
                                            const std::vector<std::pair<std::size_t, std::size_t>>& relations);

    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }

    const std::vector<std::string>& elements() const noexcept;
    const std::string& element(std::size_t i) const;

    std::optional<std::size_t> find(const std::string& id) const;
    /// Index of `id`; throws UnknownElement.
    std::size_t index_of(const std::string& id) const;
    bool contains(const std::string& id) const { return find(id).has_value(); }

    bool leq(std::size_t i, std::size_t j) const;
    bool leq(const std::string& x, const std::string& y) const;
    bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
    bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

    /// {j : i <= j} as a bit row.
    const Bits& above(std::size_t i) const;
    /// {j : j <= i} as a bit row.
    const Bits& below(std::size_t i) const;

    const std::vector<std::size_t>& upper_covers(std::size_t i) const;
    const std::vector<std::size_t>& lower_covers(std::size_t i) const;

    /// Cover pairs by identifier, sorted lexicographically.
    std::vector<Relation> covers() const;
    std::size_t cover_count() const noexcept;

    /// Same elements in the same order and the same covers.
    bool operator==(const FinitePoset& other) const;
    bool operator!=(const FinitePoset& other) const { return !(*this == other); }

    /// True when both handles share storage (implies equality).
    bool shares_storage(const FinitePoset& other) const noexcept { return data_ == other.data_; }

private:
    struct Data;
    explicit FinitePoset(std::shared_ptr<const Data> data);
    static FinitePoset from_closure(std::vector<std::string> elements, std::vector<Bits> up);

    friend FinitePoset opposite(const FinitePoset&);
    friend FinitePoset subposet(const FinitePoset&, const Bits&);

    std::shared_ptr<const Data> data_;
};

/// Same as the FinitePoset constructor.
FinitePoset new_poset(std::vector<std::string> elements, const std::vector<Relation>& relations);

FinitePoset chain_poset(std::size_t n, const std::string& prefix = "");
FinitePoset antichain_poset(std::size_t n, const std::string& prefix = "");
FinitePoset point_poset(const std::string& id = "*");

/// F_x, the elements above x (inclusive).
FinitePoset up_set(const FinitePoset& poset, const std::string& x);
/// U_x, the elements below x (inclusive).
FinitePoset down_set(const FinitePoset& poset, const std::string& x);
/// F̂_x = F_x minus x.
FinitePoset strict_up_set(const FinitePoset& poset, const std::string& x);
/// Û_x = U_x minus x.
FinitePoset strict_down_set(const FinitePoset& poset, const std::string& x);

/// Same elements, reversed order.
FinitePoset opposite(const FinitePoset& poset);

/// Full induced subposet; element order follows the parent.
FinitePoset subposet(const FinitePoset& poset, const Bits& members);
FinitePoset subposet(const FinitePoset& poset, const std::vector<std::string>& members);
/// Induced subposet on everything except the listed elements.
FinitePoset remove_elements(const FinitePoset& poset, const std::vector<std::string>& removed);

/// Kahn's algorithm, always taking the lexicographically smallest available identifier.
std::vector<std::string> linear_extension(const FinitePoset& poset);
std::vector<std::size_t> linear_extension_indices(const FinitePoset& poset);

/// Elements "(x,y)", ordered componentwise.
FinitePoset product(const FinitePoset& left, const FinitePoset& right);

std::optional<std::size_t> maximum(const FinitePoset& poset);
std::optional<std::size_t> minimum(const FinitePoset& poset);
std::vector<std::size_t> maximal_elements(const FinitePoset& poset);
std::vector<std::size_t> minimal_elements(const FinitePoset& poset);

/// Length (edge count) of the longest chain ending at each element.
std::vector<std::size_t> heights(const FinitePoset& poset);

constexpr std::size_t kDefaultIsomorphismLimit = 16;

/// Exact isomorphism test by invariant-pruned backtracking.  Throws
/// SizeLimitExceeded when either poset is larger than `size_limit`.
bool is_isomorphic(const FinitePoset& a, const FinitePoset& b,
                   std::size_t size_limit = kDefaultIsomorphismLimit);

/// An order-preserving (equivalently, continuous) map between finite posets.
class PosetMap {
public:
    /// Validates totality and order preservation; throws NotOrderPreserving.
    PosetMap(FinitePoset source, FinitePoset target, std::vector<std::size_t> assignment);

    static PosetMap from_assignment(FinitePoset source, FinitePoset target,
                                    const std::map<std::string, std::string>& assignment);

    const FinitePoset& source() const noexcept { return source_; }
    const FinitePoset& target() const noexcept { return target_; }
    const std::vector<std::size_t>& assignment() const noexcept { return assignment_; }

    std::size_t operator()(std::size_t i) const { return assignment_.at(i); }
    const std::string& operator()(const std::string& x) const;

    /// Assignment keyed by identifier.
    std::map<std::string, std::string> as_map() const;

    bool operator==(const PosetMap& other) const;
    bool operator!=(const PosetMap& other) const { return !(*this == other); }

private:
    FinitePoset source_;
    FinitePoset target_;
    std::vector<std::size_t> assignment_;
};

PosetMap new_map(FinitePoset source, FinitePoset target,
                 const std::map<std::string, std::string>& assignment);
PosetMap identity_map(const FinitePoset& poset);
PosetMap constant_map(const FinitePoset& source, const FinitePoset& target, const std::string& value);

/// `second ∘ first`; throws DomainMismatch unless first.target == second.source.
PosetMap compose(const PosetMap& first, const PosetMap& second);

/// Induced subposet of the source on f^{-1}(members).
FinitePoset preimage(const PosetMap& f, const Bits& members);
FinitePoset preimage(const PosetMap& f, const std::vector<std::string>& members);

/// Inclusion of an induced subposet, matching elements by identifier.
PosetMap inclusion_map(const FinitePoset& sub, const FinitePoset& super);

}  // namespace finhtop
