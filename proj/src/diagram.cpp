#include "finhtop/diagram.hpp"

#include "finhtop/detail/functor.hpp"
#include "finhtop/errors.hpp"

namespace finhtop {

PosetDiagram::PosetDiagram(FinitePoset index, const std::map<std::string, FinitePoset>& fibers,
                           const CoverMaps& transitions)
    : index_(std::move(index))
{
    const std::size_t n = index_.size();
    for (const auto& [p, fiber] : fibers)
        index_.index_of(p);
    fibers_.reserve(n);
    for (const auto& p : index_.elements()) {
        auto it = fibers.find(p);
        if (it == fibers.end())
            throw MissingFiber("no fiber given for index element '" + p + "'");
        fibers_.push_back(it->second);
    }

    std::vector<std::optional<PosetMap>> table(n * n);
    for (const auto& [key, f] : transitions) {
        const auto p = index_.index_of(key.first);
        const auto q = index_.index_of(key.second);
        if (!index_.leq(p, q))
            throw DomainMismatch("transition " + key.first + " -> " + key.second + " goes against the index order");
        table[p * n + q] = f;
    }
    validate_and_close(std::move(table));
}

PosetDiagram::PosetDiagram(FinitePoset index, std::vector<FinitePoset> fibers,
                           const std::vector<std::tuple<std::size_t, std::size_t, PosetMap>>& transitions)
    : index_(std::move(index)), fibers_(std::move(fibers))
{
    const std::size_t n = index_.size();
    if (fibers_.size() != n)
        throw MissingFiber("expected one fiber per index element");
    std::vector<std::optional<PosetMap>> table(n * n);
    for (const auto& [p, q, f] : transitions) {
        if (p >= n || q >= n || !index_.leq(p, q))
            throw DomainMismatch("transition goes against the index order");
        table[p * n + q] = f;
    }
    validate_and_close(std::move(table));
}

void PosetDiagram::validate_and_close(std::vector<std::optional<PosetMap>> table)
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
    transitions_ = detail::close_transitions<PosetMap>(
        index_, std::move(table), [](const PosetMap& a, const PosetMap& b) { return compose(a, b); },
        [this](std::size_t p) { return identity_map(fibers_[p]); });
}

const PosetMap& PosetDiagram::transition(std::size_t p, std::size_t q) const
{
    const std::size_t n = index_.size();
    if (p >= n || q >= n || !transitions_[p * n + q])
        throw DomainMismatch("no transition between these index elements");
    return *transitions_[p * n + q];
}

const PosetMap& PosetDiagram::transition(const std::string& p, const std::string& q) const
{
    return transition(index_.index_of(p), index_.index_of(q));
}

std::size_t PosetDiagram::total_size() const
{
    std::size_t total = 0;
    for (const auto& fiber : fibers_)
        total += fiber.size();
    return total;
}

bool PosetDiagram::operator==(const PosetDiagram& other) const
{
    if (index_ != other.index_ || fibers_ != other.fibers_)
        return false;
    for (std::size_t p = 0; p < index_.size(); ++p)
        for (std::size_t q : index_.upper_covers(p))
            if (transition(p, q).assignment() != other.transition(p, q).assignment())
                return false;
    return true;
}

DiagramMorphism::DiagramMorphism(PosetDiagram source, PosetDiagram target, std::vector<PosetMap> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components))
{
    const auto& index = source_.index();
    if (index != target_.index())
        throw DomainMismatch("morphism between diagrams over different index posets");
    if (components_.size() != index.size())
        throw DomainMismatch("morphism needs one component per index element");
    for (std::size_t p = 0; p < index.size(); ++p)
        if (components_[p].source() != source_.fiber(p) || components_[p].target() != target_.fiber(p))
            throw DomainMismatch("component at '" + index.element(p) + "' does not run between the fibers");
    for (std::size_t p = 0; p < index.size(); ++p)
        for (std::size_t q : index.upper_covers(p)) {
            const auto& f = source_.transition(p, q);
            const auto& g = target_.transition(p, q);
            for (std::size_t x = 0; x < f.source().size(); ++x)
                if (g(components_[p](x)) != components_[q](f(x)))
                    throw NotNatural("naturality fails on " + index.element(p) + " -> " + index.element(q) +
                                     " at '" + f.source().element(x) + "'");
        }
}

PosetDiagram new_diagram(FinitePoset index, const std::map<std::string, FinitePoset>& fibers,
                         const PosetDiagram::CoverMaps& transitions)
{
    return PosetDiagram(std::move(index), fibers, transitions);
}

PosetDiagram constant_diagram(const FinitePoset& index, const FinitePoset& fiber)
{
    std::vector<std::tuple<std::size_t, std::size_t, PosetMap>> transitions;
    const auto id = identity_map(fiber);
    for (std::size_t p = 0; p < index.size(); ++p)
        for (std::size_t q : index.upper_covers(p))
            transitions.emplace_back(p, q, id);
    return PosetDiagram(index, std::vector<FinitePoset>(index.size(), fiber), transitions);
}

std::string hocolim_name(const std::string& p, const std::string& x) { return p + kFiberSeparator + x; }

std::vector<std::size_t> hocolim_offsets(const PosetDiagram& diagram)
{
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    for (const auto& fiber : diagram.fibers()) {
        offsets.push_back(total);
        total += fiber.size();
    }
    return offsets;
}

FinitePoset hocolim(const PosetDiagram& diagram)
{
    const auto& index = diagram.index();
    const auto offsets = hocolim_offsets(diagram);
    std::vector<std::string> elements;
    elements.reserve(diagram.total_size());
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (std::size_t p = 0; p < index.size(); ++p) {
        const auto& fiber = diagram.fiber(p);
        for (std::size_t x = 0; x < fiber.size(); ++x) {
            elements.push_back(hocolim_name(index.element(p), fiber.element(x)));
            for (std::size_t y : fiber.upper_covers(x))
                relations.emplace_back(offsets[p] + x, offsets[p] + y);
        }
        // (p,x) <= (q, f_pq(x)) along index covers generates the cross-fiber order
        for (std::size_t q : index.upper_covers(p)) {
            const auto& f = diagram.transition(p, q);
            for (std::size_t x = 0; x < fiber.size(); ++x)
                relations.emplace_back(offsets[p] + x, offsets[q] + f(x));
        }
    }
    return FinitePoset::from_index_relations(std::move(elements), relations);
}

PosetDiagram restrict(const PosetDiagram& diagram, const Bits& kept)
{
    const auto& index = diagram.index();
    const FinitePoset sub = subposet(index, kept);
    std::vector<FinitePoset> fibers;
    std::vector<std::size_t> original;
    for (const auto& p : sub.elements()) {
        original.push_back(index.index_of(p));
        fibers.push_back(diagram.fiber(original.back()));
    }
    std::vector<std::tuple<std::size_t, std::size_t, PosetMap>> transitions;
    for (std::size_t a = 0; a < sub.size(); ++a)
        for (std::size_t b : sub.upper_covers(a))
            transitions.emplace_back(a, b, diagram.transition(original[a], original[b]));
    return PosetDiagram(sub, std::move(fibers), transitions);
}

PosetDiagram restrict(const PosetDiagram& diagram, const std::vector<std::string>& kept)
{
    Bits mask(diagram.index().size());
    for (const auto& p : kept)
        mask.set(diagram.index().index_of(p));
    return restrict(diagram, mask);
}

PosetDiagram pullback(const PosetMap& phi, const PosetDiagram& diagram)
{
    if (phi.target() != diagram.index())
        throw DomainMismatch("pullback map does not land in the diagram's index");
    const auto& source = phi.source();
    std::vector<FinitePoset> fibers;
    for (std::size_t p = 0; p < source.size(); ++p)
        fibers.push_back(diagram.fiber(phi(p)));
    std::vector<std::tuple<std::size_t, std::size_t, PosetMap>> transitions;
    for (std::size_t p = 0; p < source.size(); ++p)
        for (std::size_t q : source.upper_covers(p))
            transitions.emplace_back(p, q, diagram.transition(phi(p), phi(q)));
    return PosetDiagram(source, std::move(fibers), transitions);
}

PosetMap canonical_map(const PosetMap& phi, const PosetDiagram& diagram)
{
    const PosetDiagram pulled = pullback(phi, diagram);
    const auto source_offsets = hocolim_offsets(pulled);
    const auto target_offsets = hocolim_offsets(diagram);
    std::vector<std::size_t> values;
    values.reserve(pulled.total_size());
    for (std::size_t p = 0; p < pulled.index().size(); ++p)
        for (std::size_t x = 0; x < pulled.fiber(p).size(); ++x)
            values.push_back(target_offsets[phi(p)] + x);
    return PosetMap(hocolim(pulled), hocolim(diagram), std::move(values));
}

PosetDiagram cylinder_diagram(const PosetMap& f)
{
    const FinitePoset index({"0", "1"}, {{"0", "1"}});
    return PosetDiagram(index, {f.source(), f.target()}, {{0, 1, f}});
}

FinitePoset mapping_cylinder(const PosetMap& f) { return hocolim(cylinder_diagram(f)); }

}  // namespace finhtop
