#include "finhtop/poset.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>
#include <unordered_map>

#include "finhtop/errors.hpp"

namespace finhtop {

struct FinitePoset::Data {
    std::vector<std::string> elements;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<Bits> up;    // up[i][j] <=> i <= j
    std::vector<Bits> down;  // down[i][j] <=> j <= i
    std::vector<std::vector<std::size_t>> upper_covers;
    std::vector<std::vector<std::size_t>> lower_covers;
    std::size_t cover_count = 0;
};

namespace {

std::unordered_map<std::string, std::size_t> index_elements(const std::vector<std::string>& elements)
{
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i].empty())
            throw InvalidIdentifier("element identifiers must be nonempty");
        if (!index.emplace(elements[i], i).second)
            throw DuplicateElement("duplicate element '" + elements[i] + "'");
    }
    return index;
}

}  // namespace

FinitePoset::FinitePoset() : data_(std::make_shared<Data>()) {}

FinitePoset::FinitePoset(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

FinitePoset FinitePoset::from_closure(std::vector<std::string> elements, std::vector<Bits> up)
{
    auto data = std::make_shared<Data>();
    const std::size_t n = elements.size();
    data->index = index_elements(elements);
    data->elements = std::move(elements);
    data->down.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
        for (auto j = up[i].find_first(); j != Bits::npos; j = up[i].find_next(j))
            data->down[j].set(i);

    data->upper_covers.resize(n);
    data->lower_covers.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Bits strict = up[i];
        strict.reset(i);
        for (auto j = strict.find_first(); j != Bits::npos; j = strict.find_next(j)) {
            // j covers i iff nothing strictly above i lies strictly below j
            if ((strict & data->down[j]).count() == 1) {
                data->upper_covers[i].push_back(j);
                data->lower_covers[j].push_back(i);
                ++data->cover_count;
            }
        }
    }
    data->up = std::move(up);
    return FinitePoset(std::move(data));
}

FinitePoset FinitePoset::from_index_relations(std::vector<std::string> elements,
                                              const std::vector<std::pair<std::size_t, std::size_t>>& relations)
{
    const std::size_t n = elements.size();
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& [a, b] : relations) {
        if (a >= n || b >= n)
            throw UnknownElement("#" + std::to_string(std::max(a, b)));
        if (a == b)
            continue;
        out[a].push_back(b);
        ++indegree[b];
    }

    std::vector<std::size_t> order;
    order.reserve(n);
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0)
            ready.push_back(i);
    while (!ready.empty()) {
        const std::size_t i = ready.back();
        ready.pop_back();
        order.push_back(i);
        for (std::size_t j : out[i])
            if (--indegree[j] == 0)
                ready.push_back(j);
    }
    if (order.size() != n) {
        std::size_t culprit = 0;
        while (indegree[culprit] == 0)
            ++culprit;
        throw CycleError("relation contains a cycle through '" + elements[culprit] + "'");
    }

    std::vector<Bits> up(n, Bits(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        up[*it].set(*it);
        for (std::size_t j : out[*it])
            up[*it] |= up[j];
    }
    return from_closure(std::move(elements), std::move(up));
}

FinitePoset::FinitePoset(std::vector<std::string> elements, const std::vector<Relation>& relations)
{
    const auto index = index_elements(elements);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(relations.size());
    for (const auto& [x, y] : relations) {
        auto ix = index.find(x);
        if (ix == index.end())
            throw UnknownElement(x);
        auto iy = index.find(y);
        if (iy == index.end())
            throw UnknownElement(y);
        pairs.emplace_back(ix->second, iy->second);
    }
    *this = from_index_relations(std::move(elements), pairs);
}

std::size_t FinitePoset::size() const noexcept { return data_->elements.size(); }

const std::vector<std::string>& FinitePoset::elements() const noexcept { return data_->elements; }

const std::string& FinitePoset::element(std::size_t i) const { return data_->elements.at(i); }

std::optional<std::size_t> FinitePoset::find(const std::string& id) const
{
    auto it = data_->index.find(id);
    if (it == data_->index.end())
        return std::nullopt;
    return it->second;
}

std::size_t FinitePoset::index_of(const std::string& id) const
{
    auto it = data_->index.find(id);
    if (it == data_->index.end())
        throw UnknownElement(id);
    return it->second;
}

bool FinitePoset::leq(std::size_t i, std::size_t j) const { return data_->up.at(i).test(j); }

bool FinitePoset::leq(const std::string& x, const std::string& y) const
{
    return leq(index_of(x), index_of(y));
}

const Bits& FinitePoset::above(std::size_t i) const { return data_->up.at(i); }

const Bits& FinitePoset::below(std::size_t i) const { return data_->down.at(i); }

const std::vector<std::size_t>& FinitePoset::upper_covers(std::size_t i) const
{
    return data_->upper_covers.at(i);
}

const std::vector<std::size_t>& FinitePoset::lower_covers(std::size_t i) const
{
    return data_->lower_covers.at(i);
}

std::vector<Relation> FinitePoset::covers() const
{
    std::vector<Relation> result;
    result.reserve(data_->cover_count);
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j : data_->upper_covers[i])
            result.emplace_back(data_->elements[i], data_->elements[j]);
    std::sort(result.begin(), result.end());
    return result;
}

std::size_t FinitePoset::cover_count() const noexcept { return data_->cover_count; }

bool FinitePoset::operator==(const FinitePoset& other) const
{
    if (data_ == other.data_)
        return true;
    if (data_->elements != other.data_->elements || data_->cover_count != other.data_->cover_count)
        return false;
    for (std::size_t i = 0; i < size(); ++i) {
        auto a = data_->upper_covers[i];
        auto b = other.data_->upper_covers[i];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return false;
    }
    return true;
}

FinitePoset new_poset(std::vector<std::string> elements, const std::vector<Relation>& relations)
{
    return FinitePoset(std::move(elements), relations);
}

FinitePoset chain_poset(std::size_t n, const std::string& prefix)
{
    std::vector<std::string> elements;
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (std::size_t i = 0; i < n; ++i) {
        elements.push_back(prefix + std::to_string(i));
        if (i > 0)
            relations.emplace_back(i - 1, i);
    }
    return FinitePoset::from_index_relations(std::move(elements), relations);
}

FinitePoset antichain_poset(std::size_t n, const std::string& prefix)
{
    std::vector<std::string> elements;
    for (std::size_t i = 0; i < n; ++i)
        elements.push_back(prefix + std::to_string(i));
    return FinitePoset::from_index_relations(std::move(elements), {});
}

FinitePoset point_poset(const std::string& id) { return FinitePoset({id}, {}); }

FinitePoset opposite(const FinitePoset& poset)
{
    auto data = std::make_shared<FinitePoset::Data>(*poset.data_);
    std::swap(data->up, data->down);
    std::swap(data->upper_covers, data->lower_covers);
    return FinitePoset(std::move(data));
}

FinitePoset subposet(const FinitePoset& poset, const Bits& members)
{
    if (members.size() != poset.size())
        throw DomainMismatch("member mask size does not match the poset");
    std::vector<std::size_t> kept;
    for (auto i = members.find_first(); i != Bits::npos; i = members.find_next(i))
        kept.push_back(i);
    std::vector<std::string> elements;
    elements.reserve(kept.size());
    std::vector<Bits> up(kept.size(), Bits(kept.size()));
    for (std::size_t a = 0; a < kept.size(); ++a) {
        elements.push_back(poset.element(kept[a]));
        for (std::size_t b = 0; b < kept.size(); ++b)
            if (poset.leq(kept[a], kept[b]))
                up[a].set(b);
    }
    return FinitePoset::from_closure(std::move(elements), std::move(up));
}

FinitePoset subposet(const FinitePoset& poset, const std::vector<std::string>& members)
{
    Bits mask(poset.size());
    for (const auto& x : members)
        mask.set(poset.index_of(x));
    return subposet(poset, mask);
}

FinitePoset remove_elements(const FinitePoset& poset, const std::vector<std::string>& removed)
{
    Bits mask(poset.size());
    mask.set();
    for (const auto& x : removed)
        mask.reset(poset.index_of(x));
    return subposet(poset, mask);
}

FinitePoset up_set(const FinitePoset& poset, const std::string& x)
{
    return subposet(poset, poset.above(poset.index_of(x)));
}

FinitePoset down_set(const FinitePoset& poset, const std::string& x)
{
    return subposet(poset, poset.below(poset.index_of(x)));
}

FinitePoset strict_up_set(const FinitePoset& poset, const std::string& x)
{
    const auto i = poset.index_of(x);
    Bits mask = poset.above(i);
    mask.reset(i);
    return subposet(poset, mask);
}

FinitePoset strict_down_set(const FinitePoset& poset, const std::string& x)
{
    const auto i = poset.index_of(x);
    Bits mask = poset.below(i);
    mask.reset(i);
    return subposet(poset, mask);
}

std::vector<std::size_t> linear_extension_indices(const FinitePoset& poset)
{
    const std::size_t n = poset.size();
    std::vector<std::size_t> remaining(n);
    for (std::size_t i = 0; i < n; ++i)
        remaining[i] = poset.lower_covers(i).size();

    auto by_id = [&](std::size_t a, std::size_t b) { return poset.element(a) > poset.element(b); };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_id)> ready(by_id);
    for (std::size_t i = 0; i < n; ++i)
        if (remaining[i] == 0)
            ready.push(i);

    std::vector<std::size_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        const std::size_t i = ready.top();
        ready.pop();
        order.push_back(i);
        for (std::size_t j : poset.upper_covers(i))
            if (--remaining[j] == 0)
                ready.push(j);
    }
    return order;
}

std::vector<std::string> linear_extension(const FinitePoset& poset)
{
    std::vector<std::string> result;
    for (std::size_t i : linear_extension_indices(poset))
        result.push_back(poset.element(i));
    return result;
}

FinitePoset product(const FinitePoset& left, const FinitePoset& right)
{
    const std::size_t m = right.size();
    std::vector<std::string> elements;
    elements.reserve(left.size() * m);
    for (const auto& x : left.elements())
        for (const auto& y : right.elements())
            elements.push_back("(" + x + "," + y + ")");

    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t i2 : left.upper_covers(i))
                relations.emplace_back(i * m + j, i2 * m + j);
            for (std::size_t j2 : right.upper_covers(j))
                relations.emplace_back(i * m + j, i * m + j2);
        }
    return FinitePoset::from_index_relations(std::move(elements), relations);
}

std::optional<std::size_t> maximum(const FinitePoset& poset)
{
    for (std::size_t i = 0; i < poset.size(); ++i)
        if (poset.below(i).count() == poset.size())
            return i;
    return std::nullopt;
}

std::optional<std::size_t> minimum(const FinitePoset& poset)
{
    for (std::size_t i = 0; i < poset.size(); ++i)
        if (poset.above(i).count() == poset.size())
            return i;
    return std::nullopt;
}

std::vector<std::size_t> maximal_elements(const FinitePoset& poset)
{
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < poset.size(); ++i)
        if (poset.upper_covers(i).empty())
            result.push_back(i);
    return result;
}

std::vector<std::size_t> minimal_elements(const FinitePoset& poset)
{
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < poset.size(); ++i)
        if (poset.lower_covers(i).empty())
            result.push_back(i);
    return result;
}

std::vector<std::size_t> heights(const FinitePoset& poset)
{
    std::vector<std::size_t> h(poset.size(), 0);
    for (std::size_t i : linear_extension_indices(poset))
        for (std::size_t j : poset.lower_covers(i))
            h[i] = std::max(h[i], h[j] + 1);
    return h;
}

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const FinitePoset& poset)
{
    const auto h = heights(poset);
    std::vector<Signature> result;
    for (std::size_t i = 0; i < poset.size(); ++i)
        result.emplace_back(poset.below(i).count(), poset.above(i).count(), poset.lower_covers(i).size(),
                            poset.upper_covers(i).size(), h[i]);
    return result;
}

}  // namespace

bool is_isomorphic(const FinitePoset& a, const FinitePoset& b, std::size_t size_limit)
{
    if (a.size() > size_limit || b.size() > size_limit)
        throw SizeLimitExceeded("isomorphism test limited to " + std::to_string(size_limit) + " elements");
    if (a.size() != b.size() || a.cover_count() != b.cover_count())
        return false;

    const auto sa = signatures(a);
    const auto sb = signatures(b);
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y)
            return false;
    }

    const std::size_t n = a.size();
    const auto order = linear_extension_indices(a);
    std::vector<std::size_t> image(n, n);
    std::vector<bool> used(n, false);

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == n)
            return true;
        const std::size_t x = order[depth];
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || sa[x] != sb[y])
                continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d) {
                const std::size_t u = order[d];
                ok = a.leq(u, x) == b.leq(image[u], y) && a.leq(x, u) == b.leq(y, image[u]);
            }
            if (!ok)
                continue;
            image[x] = y;
            used[y] = true;
            if (extend(depth + 1))
                return true;
            used[y] = false;
        }
        return false;
    };
    return extend(0);
}

PosetMap::PosetMap(FinitePoset source, FinitePoset target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment))
{
    if (assignment_.size() != source_.size())
        throw DomainMismatch("assignment is not total on the source");
    for (std::size_t value : assignment_)
        if (value >= target_.size())
            throw UnknownElement("#" + std::to_string(value));
    for (std::size_t i = 0; i < source_.size(); ++i)
        for (std::size_t j : source_.upper_covers(i))
            if (!target_.leq(assignment_[i], assignment_[j]))
                throw NotOrderPreserving("map sends " + source_.element(i) + " <= " + source_.element(j) +
                                         " to incomparable or reversed " + target_.element(assignment_[i]) +
                                         ", " + target_.element(assignment_[j]));
}

PosetMap PosetMap::from_assignment(FinitePoset source, FinitePoset target,
                                   const std::map<std::string, std::string>& assignment)
{
    std::vector<std::size_t> values(source.size(), 0);
    std::vector<bool> seen(source.size(), false);
    for (const auto& [x, y] : assignment) {
        const auto i = source.index_of(x);
        values[i] = target.index_of(y);
        seen[i] = true;
    }
    for (std::size_t i = 0; i < source.size(); ++i)
        if (!seen[i])
            throw DomainMismatch("assignment is missing a value for '" + source.element(i) + "'");
    return PosetMap(std::move(source), std::move(target), std::move(values));
}

const std::string& PosetMap::operator()(const std::string& x) const
{
    return target_.element(assignment_[source_.index_of(x)]);
}

std::map<std::string, std::string> PosetMap::as_map() const
{
    std::map<std::string, std::string> result;
    for (std::size_t i = 0; i < source_.size(); ++i)
        result.emplace(source_.element(i), target_.element(assignment_[i]));
    return result;
}

bool PosetMap::operator==(const PosetMap& other) const
{
    return assignment_ == other.assignment_ && source_ == other.source_ && target_ == other.target_;
}

PosetMap new_map(FinitePoset source, FinitePoset target, const std::map<std::string, std::string>& assignment)
{
    return PosetMap::from_assignment(std::move(source), std::move(target), assignment);
}

PosetMap identity_map(const FinitePoset& poset)
{
    std::vector<std::size_t> values(poset.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = i;
    return PosetMap(poset, poset, std::move(values));
}

PosetMap constant_map(const FinitePoset& source, const FinitePoset& target, const std::string& value)
{
    return PosetMap(source, target, std::vector<std::size_t>(source.size(), target.index_of(value)));
}

PosetMap compose(const PosetMap& first, const PosetMap& second)
{
    if (first.target() != second.source())
        throw DomainMismatch("cannot compose: middle posets differ");
    std::vector<std::size_t> values(first.source().size());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = second(first(i));
    return PosetMap(first.source(), second.target(), std::move(values));
}

FinitePoset preimage(const PosetMap& f, const Bits& members)
{
    if (members.size() != f.target().size())
        throw DomainMismatch("member mask size does not match the target");
    Bits mask(f.source().size());
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (members.test(f(i)))
            mask.set(i);
    return subposet(f.source(), mask);
}

FinitePoset preimage(const PosetMap& f, const std::vector<std::string>& members)
{
    Bits mask(f.target().size());
    for (const auto& y : members)
        mask.set(f.target().index_of(y));
    return preimage(f, mask);
}

PosetMap inclusion_map(const FinitePoset& sub, const FinitePoset& super)
{
    std::vector<std::size_t> values(sub.size());
    for (std::size_t i = 0; i < sub.size(); ++i)
        values[i] = super.index_of(sub.element(i));
    return PosetMap(sub, super, std::move(values));
}

}  // namespace finhtop
