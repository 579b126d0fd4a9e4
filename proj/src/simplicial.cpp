#include "finhtop/simplicial.hpp"

#include <algorithm>
#include <set>

#include "finhtop/detail/functor.hpp"
#include "finhtop/errors.hpp"

namespace finhtop {

namespace {

bool is_subset(const Simplex& small, const Simplex& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Simplex> maximal_only(std::vector<Simplex> simplices)
{
    for (auto& s : simplices) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    // larger simplices first so that each candidate is tested against every possible superset
    std::vector<std::size_t> order(simplices.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return simplices[a].size() > simplices[b].size(); });
    std::vector<Simplex> facets;
    for (std::size_t i : order) {
        const auto& s = simplices[i];
        if (s.empty())
            continue;
        bool covered = false;
        for (const auto& f : facets)
            if (f.size() > s.size() && is_subset(s, f)) {
                covered = true;
                break;
            }
        if (!covered)
            facets.push_back(s);
    }
    std::sort(facets.begin(), facets.end());
    return facets;
}

/// Simplices in face-poset order (by dimension, then lexicographic) with a reverse lookup.
struct FaceTable {
    std::vector<Simplex> simplices;
    std::map<Simplex, std::size_t> position;
};

FaceTable face_table(const SimplicialComplex& complex)
{
    FaceTable table;
    for (auto& group : complex.simplices_by_dimension())
        for (auto& s : group) {
            table.position.emplace(s, table.simplices.size());
            table.simplices.push_back(std::move(s));
        }
    return table;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     const std::vector<std::vector<std::string>>& simplices)
{
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].empty())
            throw InvalidIdentifier("vertex identifiers must be nonempty");
        if (!index.emplace(vertices[i], i).second)
            throw DuplicateElement("duplicate vertex '" + vertices[i] + "'");
    }
    std::vector<Simplex> converted;
    for (const auto& s : simplices) {
        Simplex simplex;
        for (const auto& v : s) {
            auto it = index.find(v);
            if (it == index.end())
                throw UnknownElement(v);
            simplex.push_back(it->second);
        }
        converted.push_back(std::move(simplex));
    }
    *this = from_index_simplices(std::move(vertices), std::move(converted));
}

SimplicialComplex SimplicialComplex::from_index_simplices(std::vector<std::string> vertices,
                                                          std::vector<Simplex> simplices)
{
    SimplicialComplex complex;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].empty())
            throw InvalidIdentifier("vertex identifiers must be nonempty");
        if (!complex.index_.emplace(vertices[i], i).second)
            throw DuplicateElement("duplicate vertex '" + vertices[i] + "'");
    }
    for (const auto& s : simplices)
        for (std::size_t v : s)
            if (v >= vertices.size())
                throw UnknownElement("#" + std::to_string(v));
    complex.facets_ = maximal_only(std::move(simplices));
    std::vector<bool> used(vertices.size(), false);
    for (const auto& f : complex.facets_)
        for (std::size_t v : f)
            used[v] = true;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!used[i])
            throw InvalidComplex("vertex '" + vertices[i] + "' lies in no simplex");
    complex.vertices_ = std::move(vertices);
    return complex;
}

std::size_t SimplicialComplex::index_of(const std::string& v) const
{
    auto it = index_.find(v);
    if (it == index_.end())
        throw UnknownElement(v);
    return it->second;
}

std::optional<std::size_t> SimplicialComplex::find(const std::string& v) const
{
    auto it = index_.find(v);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int SimplicialComplex::dimension() const noexcept
{
    int dim = -1;
    for (const auto& f : facets_)
        dim = std::max(dim, static_cast<int>(f.size()) - 1);
    return dim;
}

bool SimplicialComplex::contains(const Simplex& simplex) const
{
    if (simplex.empty())
        return false;
    for (const auto& f : facets_)
        if (f.size() >= simplex.size() && is_subset(simplex, f))
            return true;
    return false;
}

std::vector<std::vector<Simplex>> SimplicialComplex::simplices_by_dimension() const
{
    const int dim = dimension();
    std::vector<std::set<Simplex>> groups(static_cast<std::size_t>(dim + 1));
    for (const auto& f : facets_) {
        const std::size_t k = f.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::size_t{1} << i))
                    face.push_back(f[i]);
            groups[face.size() - 1].insert(std::move(face));
        }
    }
    std::vector<std::vector<Simplex>> result;
    for (auto& g : groups)
        result.emplace_back(g.begin(), g.end());
    return result;
}

std::size_t SimplicialComplex::simplex_count() const
{
    std::size_t total = 0;
    for (const auto& g : simplices_by_dimension())
        total += g.size();
    return total;
}

std::string SimplicialComplex::simplex_name(const Simplex& simplex) const
{
    std::vector<std::string> names;
    for (std::size_t v : simplex)
        names.push_back(vertices_.at(v));
    std::sort(names.begin(), names.end());
    std::string out = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i > 0)
            out += ",";
        out += names[i];
    }
    return out + "}";
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment))
{
    if (assignment_.size() != source_.vertex_count())
        throw DomainMismatch("vertex assignment is not total on the source");
    for (std::size_t v : assignment_)
        if (v >= target_.vertex_count())
            throw UnknownElement("#" + std::to_string(v));
    for (const auto& f : source_.facets())
        if (!target_.contains(image(f)))
            throw NotSimplicial("image of " + source_.simplex_name(f) + " is not a simplex of the target");
}

SimplicialMap SimplicialMap::from_assignment(SimplicialComplex source, SimplicialComplex target,
                                             const std::map<std::string, std::string>& assignment)
{
    std::vector<std::size_t> values(source.vertex_count(), 0);
    std::vector<bool> seen(source.vertex_count(), false);
    for (const auto& [v, w] : assignment) {
        const auto i = source.index_of(v);
        values[i] = target.index_of(w);
        seen[i] = true;
    }
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!seen[i])
            throw DomainMismatch("vertex assignment is missing '" + source.vertex(i) + "'");
    return SimplicialMap(std::move(source), std::move(target), std::move(values));
}

Simplex SimplicialMap::image(const Simplex& simplex) const
{
    Simplex out;
    out.reserve(simplex.size());
    for (std::size_t v : simplex)
        out.push_back(assignment_.at(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::map<std::string, std::string> SimplicialMap::as_map() const
{
    std::map<std::string, std::string> result;
    for (std::size_t v = 0; v < assignment_.size(); ++v)
        result.emplace(source_.vertex(v), target_.vertex(assignment_[v]));
    return result;
}

SimplicialMap identity_map(const SimplicialComplex& complex)
{
    std::vector<std::size_t> values(complex.vertex_count());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = i;
    return SimplicialMap(complex, complex, std::move(values));
}

SimplicialMap compose(const SimplicialMap& first, const SimplicialMap& second)
{
    if (first.target() != second.source())
        throw DomainMismatch("cannot compose: middle complexes differ");
    std::vector<std::size_t> values(first.source().vertex_count());
    for (std::size_t v = 0; v < values.size(); ++v)
        values[v] = second(first(v));
    return SimplicialMap(first.source(), second.target(), std::move(values));
}

SimplicialComplex full_simplex(const std::vector<std::string>& vertices)
{
    return SimplicialComplex(vertices, {vertices});
}

SimplicialComplex simplex_boundary(const std::vector<std::string>& vertices)
{
    std::vector<std::vector<std::string>> faces;
    for (std::size_t skip = 0; skip < vertices.size(); ++skip) {
        std::vector<std::string> face;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (i != skip)
                face.push_back(vertices[i]);
        faces.push_back(std::move(face));
    }
    return SimplicialComplex(vertices, faces);
}

SimplicialComplex order_complex(const FinitePoset& poset)
{
    if (poset.empty())
        throw EmptyPoset();
    // maximal chains are exactly the saturated paths from a minimal to a maximal element
    std::vector<Simplex> facets;
    Simplex path;
    auto walk = [&](auto&& self, std::size_t x) -> void {
        path.push_back(x);
        const auto& ups = poset.upper_covers(x);
        if (ups.empty())
            facets.push_back(path);
        for (std::size_t y : ups)
            self(self, y);
        path.pop_back();
    };
    for (std::size_t m : minimal_elements(poset))
        walk(walk, m);
    return SimplicialComplex::from_index_simplices(poset.elements(), std::move(facets));
}

std::vector<std::vector<Simplex>> poset_chains(const FinitePoset& poset)
{
    if (poset.empty())
        throw EmptyPoset();
    std::vector<std::vector<Simplex>> groups;
    Simplex chain;
    // chains grow upward from their least element; each chain is produced exactly once
    auto grow = [&](auto&& self) -> void {
        if (groups.size() < chain.size())
            groups.resize(chain.size());
        Simplex sorted = chain;
        std::sort(sorted.begin(), sorted.end());
        groups[chain.size() - 1].push_back(std::move(sorted));
        Bits above = poset.above(chain.back());
        above.reset(chain.back());
        for (auto y = above.find_first(); y != Bits::npos; y = above.find_next(y)) {
            chain.push_back(y);
            self(self);
            chain.pop_back();
        }
    };
    for (std::size_t x = 0; x < poset.size(); ++x) {
        chain.push_back(x);
        grow(grow);
        chain.pop_back();
    }
    for (auto& g : groups)
        std::sort(g.begin(), g.end());
    return groups;
}

SimplicialMap order_complex_map(const PosetMap& f)
{
    return SimplicialMap(order_complex(f.source()), order_complex(f.target()), f.assignment());
}

FinitePoset face_poset(const SimplicialComplex& complex)
{
    if (complex.empty())
        throw EmptyComplex();
    const auto table = face_table(complex);
    std::vector<std::string> names;
    names.reserve(table.simplices.size());
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (std::size_t i = 0; i < table.simplices.size(); ++i) {
        const auto& s = table.simplices[i];
        names.push_back(complex.simplex_name(s));
        if (s.size() < 2)
            continue;
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            Simplex face;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != skip)
                    face.push_back(s[k]);
            relations.emplace_back(table.position.at(face), i);
        }
    }
    return FinitePoset::from_index_relations(std::move(names), relations);
}

FinitePoset face_poset_op(const SimplicialComplex& complex) { return opposite(face_poset(complex)); }

PosetMap face_poset_map(const SimplicialMap& f)
{
    const auto source_table = face_table(f.source());
    const auto target_table = face_table(f.target());
    std::vector<std::size_t> values;
    values.reserve(source_table.simplices.size());
    for (const auto& s : source_table.simplices)
        values.push_back(target_table.position.at(f.image(s)));
    return PosetMap(face_poset(f.source()), face_poset(f.target()), std::move(values));
}

PosetMap face_poset_op_map(const SimplicialMap& f)
{
    const PosetMap plain = face_poset_map(f);
    return PosetMap(opposite(plain.source()), opposite(plain.target()), plain.assignment());
}

SimplicialComplex barycentric(const SimplicialComplex& complex) { return order_complex(face_poset(complex)); }

SimplicialMap barycentric_map(const SimplicialMap& f) { return order_complex_map(face_poset_map(f)); }

long long euler_characteristic(const SimplicialComplex& complex)
{
    long long chi = 0;
    long long sign = 1;
    for (const auto& g : complex.simplices_by_dimension()) {
        chi += sign * static_cast<long long>(g.size());
        sign = -sign;
    }
    return chi;
}

ComplexDiagram::ComplexDiagram(FinitePoset index, const std::map<std::string, SimplicialComplex>& fibers,
                               const CoverMaps& transitions)
    : index_(std::move(index))
{
    const std::size_t n = index_.size();
    for (const auto& [p, fiber] : fibers)
        index_.index_of(p);
    for (const auto& p : index_.elements()) {
        auto it = fibers.find(p);
        if (it == fibers.end())
            throw MissingFiber("no fiber given for index element '" + p + "'");
        fibers_.push_back(it->second);
    }
    std::vector<std::optional<SimplicialMap>> table(n * n);
    for (const auto& [key, f] : transitions) {
        const auto p = index_.index_of(key.first);
        const auto q = index_.index_of(key.second);
        if (!index_.leq(p, q))
            throw DomainMismatch("transition " + key.first + " -> " + key.second + " goes against the index order");
        table[p * n + q] = f;
    }
    validate_and_close(std::move(table));
}

ComplexDiagram::ComplexDiagram(FinitePoset index, std::vector<SimplicialComplex> fibers,
                               const std::vector<std::tuple<std::size_t, std::size_t, SimplicialMap>>& transitions)
    : index_(std::move(index)), fibers_(std::move(fibers))
{
    const std::size_t n = index_.size();
    if (fibers_.size() != n)
        throw MissingFiber("expected one fiber per index element");
    std::vector<std::optional<SimplicialMap>> table(n * n);
    for (const auto& [p, q, f] : transitions) {
        if (p >= n || q >= n || !index_.leq(p, q))
            throw DomainMismatch("transition goes against the index order");
        table[p * n + q] = f;
    }
    validate_and_close(std::move(table));
}

void ComplexDiagram::validate_and_close(std::vector<std::optional<SimplicialMap>> table)
{
    const std::size_t n = index_.size();
    for (std::size_t p = 0; p < n; ++p) {
        if (index_.element(p).find(kFiberSeparator) != std::string::npos)
            throw InvalidIdentifier("index identifier '" + index_.element(p) + "' contains the reserved '::'");
        if (fibers_[p].empty())
            throw MissingFiber("fiber over '" + index_.element(p) + "' is empty");
    }
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            const auto& f = table[p * n + q];
            if (f && (f->source() != fibers_[p] || f->target() != fibers_[q]))
                throw DomainMismatch("transition " + index_.element(p) + " -> " + index_.element(q) +
                                     " does not run between the corresponding fibers");
        }
    transitions_ = detail::close_transitions<SimplicialMap>(
        index_, std::move(table), [](const SimplicialMap& a, const SimplicialMap& b) { return compose(a, b); },
        [this](std::size_t p) { return identity_map(fibers_[p]); });
}

const SimplicialMap& ComplexDiagram::transition(std::size_t p, std::size_t q) const
{
    const std::size_t n = index_.size();
    if (p >= n || q >= n || !transitions_[p * n + q])
        throw DomainMismatch("no transition between these index elements");
    return *transitions_[p * n + q];
}

const SimplicialMap& ComplexDiagram::transition(const std::string& p, const std::string& q) const
{
    return transition(index_.index_of(p), index_.index_of(q));
}

ComplexDiagram restrict(const ComplexDiagram& diagram, const Bits& kept)
{
    const auto& index = diagram.index();
    const FinitePoset sub = subposet(index, kept);
    std::vector<SimplicialComplex> fibers;
    std::vector<std::size_t> original;
    for (const auto& p : sub.elements()) {
        original.push_back(index.index_of(p));
        fibers.push_back(diagram.fiber(original.back()));
    }
    std::vector<std::tuple<std::size_t, std::size_t, SimplicialMap>> transitions;
    for (std::size_t a = 0; a < sub.size(); ++a)
        for (std::size_t b : sub.upper_covers(a))
            transitions.emplace_back(a, b, diagram.transition(original[a], original[b]));
    return ComplexDiagram(sub, std::move(fibers), transitions);
}

namespace {

template <class Fiber, class Map, class Diagram, class FiberFn, class MapFn>
auto lift(const Diagram& diagram, FiberFn on_fiber, MapFn on_map)
{
    const auto& index = diagram.index();
    std::vector<Fiber> fibers;
    for (std::size_t p = 0; p < index.size(); ++p)
        fibers.push_back(on_fiber(diagram.fiber(p)));
    std::vector<std::tuple<std::size_t, std::size_t, Map>> transitions;
    for (std::size_t p = 0; p < index.size(); ++p)
        for (std::size_t q : index.upper_covers(p)) {
            Map f = on_map(diagram.transition(p, q));
            // rebind to the stored fiber objects so that equality checks share storage
            transitions.emplace_back(p, q, Map(fibers[p], fibers[q], f.assignment()));
        }
    return std::make_pair(std::move(fibers), std::move(transitions));
}

}  // namespace

ComplexDiagram lift_order_complex(const PosetDiagram& diagram)
{
    auto [fibers, transitions] = lift<SimplicialComplex, SimplicialMap>(
        diagram, [](const FinitePoset& p) { return order_complex(p); },
        [](const PosetMap& f) { return order_complex_map(f); });
    return ComplexDiagram(diagram.index(), std::move(fibers), transitions);
}

PosetDiagram lift_face_poset(const ComplexDiagram& diagram)
{
    auto [fibers, transitions] = lift<FinitePoset, PosetMap>(
        diagram, [](const SimplicialComplex& k) { return face_poset(k); },
        [](const SimplicialMap& f) { return face_poset_map(f); });
    return PosetDiagram(diagram.index(), std::move(fibers), transitions);
}

PosetDiagram lift_face_poset_op(const ComplexDiagram& diagram)
{
    auto [fibers, transitions] = lift<FinitePoset, PosetMap>(
        diagram, [](const SimplicialComplex& k) { return face_poset_op(k); },
        [](const SimplicialMap& f) { return face_poset_op_map(f); });
    return PosetDiagram(diagram.index(), std::move(fibers), transitions);
}

ComplexDiagram barycentric_diagram(const ComplexDiagram& diagram)
{
    return lift_order_complex(lift_face_poset(diagram));
}

FinitePoset preimage_poset(const PosetMap& face_op_map, const std::string& sigma)
{
    const auto& target = face_op_map.target();
    return preimage(face_op_map, target.below(target.index_of(sigma)));
}

}  // namespace finhtop
