#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "finhtop/errors.hpp"
#include "finhtop/poset.hpp"

namespace finhtop::detail {

/**
 * Complete a table of transitions given on the cover pairs of `index` to all
 * comparable pairs, checking path independence.
 *
 * `table` is row-major n*n: entry (p, q) is the map p -> q.  Cover entries
 * must be present; other present entries are cross-checked against the
 * synthesized composite.  For every q above p, each lower cover r of q with
 * p <= r yields the candidate f_rq ∘ f_pr; all candidates must agree, which
 * by induction on chain length makes every chain compose to the same map.
 */
template <class Map, class Compose, class Identity>
std::vector<std::optional<Map>> close_transitions(const FinitePoset& index, std::vector<std::optional<Map>> table,
                                                  Compose compose, Identity identity)
{
    const std::size_t n = index.size();
    std::vector<std::optional<Map>> closed(n * n);
    const auto order = linear_extension_indices(index);
    for (std::size_t p = 0; p < n; ++p) {
        closed[p * n + p] = identity(p);
        for (std::size_t q : order) {
            if (q == p || !index.leq(p, q))
                continue;
            std::optional<Map> result;
            std::size_t first_via = p;
            for (std::size_t r : index.lower_covers(q)) {
                if (!index.leq(p, r))
                    continue;
                const auto& step = table[r * n + q];
                if (!step)
                    throw MissingTransition("missing transition " + index.element(r) + " -> " + index.element(q));
                Map candidate = (r == p) ? *step : compose(*closed[p * n + r], *step);
                if (!result) {
                    result = std::move(candidate);
                    first_via = r;
                } else if (!(candidate == *result)) {
                    throw FunctorialityError(index.element(p), index.element(r == p ? first_via : r),
                                             index.element(q));
                }
            }
            const auto& given = table[p * n + q];
            if (given && !(*given == *result))
                throw FunctorialityError(index.element(p), index.element(first_via), index.element(q));
            closed[p * n + q] = std::move(result);
        }
    }
    return closed;
}

}  // namespace finhtop::detail
