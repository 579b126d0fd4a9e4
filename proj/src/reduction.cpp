#include "finhtop/reduction.hpp"

#include <functional>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "finhtop/errors.hpp"

namespace finhtop {

std::string to_string(RemovalKind kind)
{
    switch (kind) {
    case RemovalKind::UpBeat: return "up-beat";
    case RemovalKind::DownBeat: return "down-beat";
    case RemovalKind::UpWeak: return "up-weak";
    case RemovalKind::DownWeak: return "down-weak";
    case RemovalKind::GammaUp: return "gamma-up";
    case RemovalKind::GammaDown: return "gamma-down";
    }
    return "?";
}

std::optional<RemovalKind> parse_removal_kind(const std::string& text)
{
    for (auto kind : {RemovalKind::UpBeat, RemovalKind::DownBeat, RemovalKind::UpWeak, RemovalKind::DownWeak,
                      RemovalKind::GammaUp, RemovalKind::GammaDown})
        if (to_string(kind) == text)
            return kind;
    return std::nullopt;
}

bool is_up_kind(RemovalKind kind)
{
    return kind == RemovalKind::UpBeat || kind == RemovalKind::UpWeak || kind == RemovalKind::GammaUp;
}

std::string to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Trivial: return "trivial";
    case Verdict::NonTrivial: return "nontrivial";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

namespace detail {

Bits strict_up_in(const FinitePoset& poset, const Bits& alive, std::size_t x)
{
    Bits s = poset.above(x) & alive;
    s.reset(x);
    return s;
}

Bits strict_down_in(const FinitePoset& poset, const Bits& alive, std::size_t x)
{
    Bits s = poset.below(x) & alive;
    s.reset(x);
    return s;
}

bool up_beat_in(const FinitePoset& poset, const Bits& alive, std::size_t x)
{
    const Bits s = strict_up_in(poset, alive, x);
    for (auto m = s.find_first(); m != Bits::npos; m = s.find_next(m))
        if (s.is_subset_of(poset.above(m)))
            return true;
    return false;
}

bool down_beat_in(const FinitePoset& poset, const Bits& alive, std::size_t x)
{
    const Bits s = strict_down_in(poset, alive, x);
    for (auto m = s.find_first(); m != Bits::npos; m = s.find_next(m))
        if (s.is_subset_of(poset.below(m)))
            return true;
    return false;
}

namespace {

/// Removes beat points from `alive`, first in `order` each round, until none remain.
RemovalSequence dismantle(const FinitePoset& poset, Bits& alive, const std::vector<std::size_t>& order)
{
    RemovalSequence steps;
    bool removed = true;
    while (removed && alive.count() > 1) {
        removed = false;
        for (std::size_t x : order) {
            if (!alive.test(x))
                continue;
            if (up_beat_in(poset, alive, x)) {
                steps.push_back({poset.element(x), RemovalKind::UpBeat});
            } else if (down_beat_in(poset, alive, x)) {
                steps.push_back({poset.element(x), RemovalKind::DownBeat});
            } else {
                continue;
            }
            alive.reset(x);
            removed = true;
            break;
        }
    }
    return steps;
}

std::mutex observer_mutex;
OracleObserver observer;

void notify(const FinitePoset& poset, const Bits& members, const Triviality& result)
{
    OracleObserver current;
    {
        std::lock_guard<std::mutex> lock(observer_mutex);
        current = observer;
    }
    if (current)
        current(subposet(poset, members), result);
}

struct MaskDepthHash {
    std::size_t operator()(const std::pair<Bits, std::size_t>& key) const
    {
        return std::hash<Bits>{}(key.first) * 31 + key.second;
    }
};

/// Shared state of one oracle invocation, nested calls included.
class OracleContext {
public:
    OracleContext(const FinitePoset& poset, std::size_t states)
        : poset_(poset), order_(linear_extension_indices(poset)), states_left_(states)
    {
    }

    const FinitePoset& poset() const { return poset_; }
    const std::vector<std::size_t>& order() const { return order_; }

    bool take_state()
    {
        if (states_left_ == 0)
            return false;
        --states_left_;
        ++states_used_;
        return true;
    }
    std::size_t states_used() const { return states_used_; }

    Triviality oracle(const Bits& members, std::size_t depth)
    {
        Triviality result = compute(members, depth);
        notify(poset_, members, result);
        return result;
    }

    Verdict cached_verdict(const Bits& members, std::size_t depth)
    {
        auto key = std::make_pair(members, depth);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        const Verdict v = oracle(members, depth).verdict;
        cache_.emplace(std::move(key), v);
        return v;
    }

private:
    const FinitePoset& poset_;
    std::vector<std::size_t> order_;
    std::size_t states_left_;
    std::size_t states_used_ = 0;
    std::unordered_map<std::pair<Bits, std::size_t>, Verdict, MaskDepthHash> cache_;

    Triviality compute(const Bits& members, std::size_t depth);
};

/**
 * Depth-first search over removal sequences to a single point.  Beat points
 * first, then weak points, then (if depth > 0) γ-points recognized by nested
 * oracle calls at depth - 1.
 */
class ReductionSearch {
public:
    ReductionSearch(OracleContext& ctx, std::size_t depth) : ctx_(ctx), depth_(depth) {}

    std::optional<RemovalSequence> run(Bits start)
    {
        path_.clear();
        if (dfs(start))
            return path_;
        return std::nullopt;
    }

    bool budget_hit() const { return budget_hit_; }

private:
    bool dfs(Bits& alive)
    {
        if (alive.count() == 1)
            return true;
        if (!visited_.insert(alive).second)
            return false;
        if (!ctx_.take_state()) {
            budget_hit_ = true;
            return false;
        }
        const auto& poset = ctx_.poset();

        std::vector<std::pair<std::size_t, RemovalKind>> beat, weak;
        for (std::size_t x : ctx_.order()) {
            if (!alive.test(x))
                continue;
            if (up_beat_in(poset, alive, x))
                beat.emplace_back(x, RemovalKind::UpBeat);
            else if (down_beat_in(poset, alive, x))
                beat.emplace_back(x, RemovalKind::DownBeat);
            else if (contractible_in(poset, strict_down_in(poset, alive, x)))
                weak.emplace_back(x, RemovalKind::DownWeak);
            else if (contractible_in(poset, strict_up_in(poset, alive, x)))
                weak.emplace_back(x, RemovalKind::UpWeak);
        }
        for (const auto* group : {&beat, &weak})
            for (const auto& [x, kind] : *group)
                if (try_remove(alive, x, kind))
                    return true;
                else if (budget_hit_)
                    return false;

        if (depth_ == 0)
            return false;
        std::vector<std::pair<std::size_t, RemovalKind>> gamma;
        for (std::size_t x : ctx_.order()) {
            if (!alive.test(x))
                continue;
            if (ctx_.cached_verdict(strict_down_in(poset, alive, x), depth_ - 1) == Verdict::Trivial)
                gamma.emplace_back(x, RemovalKind::GammaDown);
            else if (ctx_.cached_verdict(strict_up_in(poset, alive, x), depth_ - 1) == Verdict::Trivial)
                gamma.emplace_back(x, RemovalKind::GammaUp);
        }
        for (const auto& [x, kind] : gamma)
            if (try_remove(alive, x, kind))
                return true;
            else if (budget_hit_)
                return false;
        return false;
    }

    bool try_remove(Bits& alive, std::size_t x, RemovalKind kind)
    {
        alive.reset(x);
        path_.push_back({ctx_.poset().element(x), kind});
        if (dfs(alive))
            return true;
        path_.pop_back();
        alive.set(x);
        return false;
    }

    OracleContext& ctx_;
    std::size_t depth_;
    std::unordered_set<Bits> visited_;
    RemovalSequence path_;
    bool budget_hit_ = false;
};

Triviality OracleContext::compute(const Bits& members, std::size_t depth)
{
    Triviality result;
    if (members.none()) {
        result.verdict = Verdict::NonTrivial;
        result.reason = "empty";
        return result;
    }
    Bits reduced = members;
    RemovalSequence beat_steps = dismantle(poset_, reduced, order_);
    if (reduced.count() == 1) {
        result.verdict = Verdict::Trivial;
        result.reduction = std::move(beat_steps);
        result.reason = "dismantlable";
        return result;
    }
    // beat-point removal preserves the homotopy type, so the core's homology is the poset's
    HomologyProfile profile = poset_homology(subposet(poset_, reduced));
    if (!profile.is_acyclic()) {
        result.verdict = Verdict::NonTrivial;
        result.certificate = std::move(profile);
        result.reason = "nonzero reduced homology";
        return result;
    }

    bool budget_hit = false;
    for (std::size_t level : {std::size_t{0}, depth}) {
        if (level > 0 && level != depth)
            continue;
        ReductionSearch search(*this, level);
        if (auto found = search.run(reduced)) {
            result.verdict = Verdict::Trivial;
            result.reduction = std::move(beat_steps);
            result.reduction.insert(result.reduction.end(), found->begin(), found->end());
            result.reason = level == 0 ? "collapsible" : "reduced by gamma-points";
            return result;
        }
        budget_hit = budget_hit || search.budget_hit();
        if (budget_hit || depth == 0)
            break;
    }
    result.verdict = Verdict::Unknown;
    result.reason = budget_hit ? "search budget exhausted" : "no reduction found within the gamma depth";
    return result;
}

}  // namespace

}  // namespace detail

void set_oracle_observer(OracleObserver next)
{
    std::lock_guard<std::mutex> lock(detail::observer_mutex);
    detail::observer = std::move(next);
}

namespace detail {

bool contractible_in(const FinitePoset& poset, const Bits& alive)
{
    if (alive.none())
        return false;
    Bits rest = alive;
    std::vector<std::size_t> order;
    for (auto i = rest.find_first(); i != Bits::npos; i = rest.find_next(i))
        order.push_back(i);
    dismantle(poset, rest, order);
    return rest.count() == 1;
}

Triviality oracle_on(const FinitePoset& poset, const Bits& members, const ReductionBudget& budget)
{
    OracleContext ctx(poset, budget.states);
    return ctx.oracle(members, budget.gamma_depth);
}

bool has_kind(const FinitePoset& poset, const Bits& alive, std::size_t x, RemovalKind kind,
              const ReductionBudget& budget)
{
    switch (kind) {
    case RemovalKind::UpBeat: return up_beat_in(poset, alive, x);
    case RemovalKind::DownBeat: return down_beat_in(poset, alive, x);
    case RemovalKind::UpWeak: return contractible_in(poset, strict_up_in(poset, alive, x));
    case RemovalKind::DownWeak: return contractible_in(poset, strict_down_in(poset, alive, x));
    case RemovalKind::GammaUp:
        return oracle_on(poset, strict_up_in(poset, alive, x), budget).verdict == Verdict::Trivial;
    case RemovalKind::GammaDown:
        return oracle_on(poset, strict_down_in(poset, alive, x), budget).verdict == Verdict::Trivial;
    }
    return false;
}

}  // namespace detail

namespace {

Bits everything(const FinitePoset& poset)
{
    Bits all(poset.size());
    all.set();
    return all;
}

}  // namespace

bool is_up_beat(const FinitePoset& poset, const std::string& x)
{
    return detail::up_beat_in(poset, everything(poset), poset.index_of(x));
}

bool is_down_beat(const FinitePoset& poset, const std::string& x)
{
    return detail::down_beat_in(poset, everything(poset), poset.index_of(x));
}

CoreResult core(const FinitePoset& poset) { return core(poset, linear_extension(poset)); }

CoreResult core(const FinitePoset& poset, const std::vector<std::string>& scan_order)
{
    if (poset.empty())
        throw EmptyPoset();
    std::vector<std::size_t> order;
    for (const auto& x : scan_order)
        order.push_back(poset.index_of(x));
    Bits alive = everything(poset);
    auto steps = detail::dismantle(poset, alive, order);
    return {subposet(poset, alive), std::move(steps)};
}

bool is_contractible(const FinitePoset& poset)
{
    if (poset.empty())
        throw EmptyPoset();
    return detail::contractible_in(poset, everything(poset));
}

bool is_down_weak(const FinitePoset& poset, const std::string& x)
{
    const auto i = poset.index_of(x);
    return detail::contractible_in(poset, detail::strict_down_in(poset, everything(poset), i));
}

bool is_up_weak(const FinitePoset& poset, const std::string& x)
{
    const auto i = poset.index_of(x);
    return detail::contractible_in(poset, detail::strict_up_in(poset, everything(poset), i));
}

CollapseResult collapse_search(const FinitePoset& poset, std::size_t budget)
{
    if (poset.empty())
        throw EmptyPoset();
    detail::OracleContext ctx(poset, budget);
    detail::ReductionSearch search(ctx, 0);
    CollapseResult result;
    result.sequence = search.run(everything(poset));
    result.exhausted = !result.sequence && !search.budget_hit();
    result.states = ctx.states_used();
    return result;
}

Triviality triviality_oracle(const FinitePoset& poset, const ReductionBudget& budget)
{
    return detail::oracle_on(poset, everything(poset), budget);
}

Triviality is_gamma_point(const FinitePoset& poset, const std::string& x, const ReductionBudget& budget)
{
    const auto i = poset.index_of(x);
    const Bits all = everything(poset);
    Triviality down = detail::oracle_on(poset, detail::strict_down_in(poset, all, i), budget);
    if (down.verdict == Verdict::Trivial) {
        down.reason = "down";
        return down;
    }
    Triviality up = detail::oracle_on(poset, detail::strict_up_in(poset, all, i), budget);
    if (up.verdict == Verdict::Trivial) {
        up.reason = "up";
        return up;
    }
    Triviality result;
    if (down.verdict == Verdict::NonTrivial && up.verdict == Verdict::NonTrivial) {
        result.verdict = Verdict::NonTrivial;
        result.reason = "both strict sets are nontrivial";
    } else {
        result.verdict = Verdict::Unknown;
        result.reason = "oracle inconclusive on " +
                        std::string(down.verdict == Verdict::Unknown ? "the strict down-set" : "the strict up-set");
    }
    return result;
}

std::optional<FinitePoset> replay_removal_sequence(const FinitePoset& poset, const RemovalSequence& sequence,
                                                   const ReductionBudget& budget)
{
    Bits alive = everything(poset);
    for (const auto& step : sequence) {
        const auto x = poset.index_of(step.element);
        if (!alive.test(x) || !detail::has_kind(poset, alive, x, step.kind, budget))
            return std::nullopt;
        alive.reset(x);
    }
    return subposet(poset, alive);
}

bool verify_removal_sequence(const FinitePoset& poset, const RemovalSequence& sequence,
                             const ReductionBudget& budget)
{
    return replay_removal_sequence(poset, sequence, budget).has_value();
}

}  // namespace finhtop
