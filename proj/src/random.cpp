#include "finhtop/random.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace finhtop {

std::size_t Rng::below(std::size_t n)
{
    // rejection keeps the draw uniform and independent of the standard library's distributions
    const std::uint64_t bound = n;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i)
{
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<std::string> numbered_ids(std::size_t n, const std::string& prefix)
{
    const std::size_t width = n <= 1 ? 1 : std::to_string(n - 1).size();
    std::vector<std::string> ids;
    ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string digits = std::to_string(i);
        ids.push_back(prefix + std::string(width - digits.size(), '0') + digits);
    }
    return ids;
}

FinitePoset random_poset(std::size_t n, double density, Rng& rng, const std::string& prefix)
{
    if (n == 0)
        throw std::invalid_argument("random_poset needs at least one element");
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.chance(density))
                relations.emplace_back(i, j);
    return FinitePoset::from_index_relations(numbered_ids(n, prefix), relations);
}

FinitePoset random_poset(std::size_t n, double density, std::uint64_t seed)
{
    Rng rng(seed);
    return random_poset(n, density, rng);
}

PosetMap random_map(const FinitePoset& source, const FinitePoset& target, Rng& rng,
                    std::optional<std::pair<std::size_t, std::size_t>> pin)
{
    const std::size_t n = source.size();
    const std::size_t fallback = pin ? pin->second : 0;
    std::vector<std::size_t> order = linear_extension_indices(source);
    if (pin) {
        order.erase(std::find(order.begin(), order.end(), pin->first));
        order.insert(order.begin(), pin->first);
    }
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<std::size_t> image(n, SIZE_MAX);
        bool ok = true;
        for (std::size_t x : order) {
            Bits allowed(target.size());
            allowed.set();
            for (std::size_t y = 0; y < n; ++y) {
                if (image[y] == SIZE_MAX)
                    continue;
                if (source.leq(y, x))
                    allowed &= target.above(image[y]);
                if (source.leq(x, y))
                    allowed &= target.below(image[y]);
            }
            if (pin && x == pin->first) {
                if (!allowed.test(pin->second)) {
                    ok = false;
                    break;
                }
                image[x] = pin->second;
                continue;
            }
            const std::size_t count = allowed.count();
            if (count == 0) {
                ok = false;
                break;
            }
            std::size_t pick = rng.below(count);
            std::size_t t = allowed.find_first();
            while (pick-- > 0)
                t = allowed.find_next(t);
            image[x] = t;
        }
        if (ok)
            return PosetMap(source, target, std::move(image));
    }
    return PosetMap(source, target, std::vector<std::size_t>(n, fallback));
}

namespace {

constexpr std::size_t kFamilyCap = 2048;

/**
 * Compatible families over the strict up-set of p: one point of each fiber
 * above p, related by the transitions.  Determined by the values on the
 * minimal elements of the up-set; `apply(m, q, y)` evaluates the transition
 * m -> q on y.  The all-basepoint family (index 0 in each fiber) is first.
 */
std::vector<std::vector<std::size_t>> compatible_families(
    const FinitePoset& index, std::size_t p, const std::vector<std::size_t>& fiber_sizes,
    const std::function<std::size_t(std::size_t, std::size_t, std::size_t)>& apply, Rng& rng)
{
    std::vector<std::size_t> above;
    for (std::size_t q = 0; q < index.size(); ++q)
        if (index.less(p, q))
            above.push_back(q);
    std::vector<std::size_t> minimal;
    for (std::size_t q : above) {
        bool is_min = true;
        for (std::size_t r : above)
            if (index.less(r, q))
                is_min = false;
        if (is_min)
            minimal.push_back(q);
    }

    auto extend = [&](const std::vector<std::size_t>& choice) -> std::optional<std::vector<std::size_t>> {
        std::vector<std::size_t> family(index.size(), SIZE_MAX);
        for (std::size_t k = 0; k < minimal.size(); ++k)
            family[minimal[k]] = choice[k];
        for (std::size_t q : above) {
            for (std::size_t k = 0; k < minimal.size(); ++k) {
                const std::size_t m = minimal[k];
                if (m == q || !index.leq(m, q))
                    continue;
                const std::size_t y = apply(m, q, choice[k]);
                if (family[q] == SIZE_MAX)
                    family[q] = y;
                else if (family[q] != y)
                    return std::nullopt;
            }
        }
        return family;
    };

    std::size_t total = 1;
    for (std::size_t m : minimal)
        total = std::min(kFamilyCap + 1, total * fiber_sizes[m]);

    std::vector<std::vector<std::size_t>> families;
    std::vector<std::size_t> choice(minimal.size(), 0);
    families.push_back(*extend(choice));
    if (total <= kFamilyCap) {
        for (std::size_t code = 1; code < total; ++code) {
            std::size_t c = code;
            for (std::size_t k = 0; k < minimal.size(); ++k) {
                choice[k] = c % fiber_sizes[minimal[k]];
                c /= fiber_sizes[minimal[k]];
            }
            if (auto f = extend(choice))
                families.push_back(std::move(*f));
        }
    } else {
        for (std::size_t draw = 0; draw < kFamilyCap; ++draw) {
            for (std::size_t k = 0; k < minimal.size(); ++k)
                choice[k] = rng.below(fiber_sizes[minimal[k]]);
            if (auto f = extend(choice); f && std::find(families.begin(), families.end(), *f) == families.end())
                families.push_back(std::move(*f));
        }
    }
    return families;
}

}  // namespace

PosetDiagram random_diagram(const FinitePoset& index, std::size_t fiber_size, Rng& rng)
{
    const std::size_t n = index.size();
    std::vector<FinitePoset> fibers(n);
    std::vector<std::size_t> sizes(n);
    for (std::size_t p = 0; p < n; ++p) {
        fibers[p] = random_poset(rng.between(1, fiber_size), rng.unit(), rng);
        sizes[p] = fibers[p].size();
    }

    // table[p][q]: assignment of the transition p -> q, filled top-down
    std::vector<std::vector<std::vector<std::size_t>>> table(n, std::vector<std::vector<std::size_t>>(n));
    auto apply = [&](std::size_t m, std::size_t q, std::size_t y) { return table[m][q][y]; };

    std::vector<std::size_t> order = linear_extension_indices(index);
    std::reverse(order.begin(), order.end());
    for (std::size_t p : order) {
        table[p][p].resize(sizes[p]);
        for (std::size_t x = 0; x < sizes[p]; ++x)
            table[p][p][x] = x;
        auto families = compatible_families(index, p, sizes, apply, rng);
        bool has_above = false;
        for (std::size_t q = 0; q < n; ++q)
            has_above = has_above || index.less(p, q);
        if (!has_above)
            continue;

        const std::size_t k = families.size();
        std::vector<std::pair<std::size_t, std::size_t>> relations;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                if (a == b)
                    continue;
                bool le = true;
                for (std::size_t q = 0; q < n && le; ++q)
                    if (families[a][q] != SIZE_MAX && !fibers[q].leq(families[a][q], families[b][q]))
                        le = false;
                if (le)
                    relations.emplace_back(a, b);
            }
        const FinitePoset limit = FinitePoset::from_index_relations(numbered_ids(k, "f"), relations);
        const PosetMap g = random_map(fibers[p], limit, rng, std::make_pair(std::size_t{0}, std::size_t{0}));
        for (std::size_t q = 0; q < n; ++q) {
            if (!index.less(p, q))
                continue;
            table[p][q].resize(sizes[p]);
            for (std::size_t x = 0; x < sizes[p]; ++x)
                table[p][q][x] = families[g(x)][q];
        }
    }

    std::vector<std::tuple<std::size_t, std::size_t, PosetMap>> transitions;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q : index.upper_covers(p))
            transitions.emplace_back(p, q, PosetMap(fibers[p], fibers[q], table[p][q]));
    return PosetDiagram(index, std::move(fibers), transitions);
}

PosetDiagram random_diagram(std::size_t index_size, std::size_t fiber_size, std::uint64_t seed)
{
    Rng rng(seed);
    const FinitePoset index = random_poset(index_size, rng.unit(), rng, "p");
    return random_diagram(index, fiber_size, rng);
}

SimplicialComplex random_complex(std::size_t v, Rng& rng, int max_dim)
{
    if (v == 0)
        throw std::invalid_argument("random_complex needs at least one vertex");
    const std::size_t max_size = std::min<std::size_t>(v, static_cast<std::size_t>(max_dim) + 1);
    std::vector<Simplex> simplices;
    const std::size_t count = rng.between(1, v);
    std::vector<bool> covered(v, false);
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<std::size_t> pool(v);
        for (std::size_t i = 0; i < v; ++i)
            pool[i] = i;
        const std::size_t k = rng.between(1, max_size);
        Simplex simplex;
        for (std::size_t t = 0; t < k; ++t) {
            const std::size_t pick = t + rng.below(v - t);
            std::swap(pool[t], pool[pick]);
            simplex.push_back(pool[t]);
            covered[pool[t]] = true;
        }
        std::sort(simplex.begin(), simplex.end());
        simplices.push_back(std::move(simplex));
    }
    for (std::size_t i = 0; i < v; ++i)
        if (!covered[i])
            simplices.push_back({i});
    return SimplicialComplex::from_index_simplices(numbered_ids(v, "v"), std::move(simplices));
}

SimplicialComplex random_complex(std::size_t v, std::uint64_t seed, int max_dim)
{
    Rng rng(seed);
    return random_complex(v, rng, max_dim);
}

ComplexDiagram random_complex_diagram(const FinitePoset& index, std::size_t vertices, Rng& rng)
{
    const std::size_t n = index.size();
    std::vector<SimplicialComplex> fibers(n);
    std::vector<std::size_t> sizes(n);
    for (std::size_t p = 0; p < n; ++p) {
        fibers[p] = random_complex(rng.between(1, vertices), rng);
        sizes[p] = fibers[p].vertex_count();
    }

    std::vector<std::vector<std::vector<std::size_t>>> table(n, std::vector<std::vector<std::size_t>>(n));
    auto apply = [&](std::size_t m, std::size_t q, std::size_t y) { return table[m][q][y]; };

    std::vector<std::size_t> order = linear_extension_indices(index);
    std::reverse(order.begin(), order.end());
    for (std::size_t p : order) {
        table[p][p].resize(sizes[p]);
        for (std::size_t x = 0; x < sizes[p]; ++x)
            table[p][p][x] = x;
        std::vector<std::size_t> above;
        for (std::size_t q = 0; q < n; ++q)
            if (index.less(p, q))
                above.push_back(q);
        if (above.empty())
            continue;
        auto families = compatible_families(index, p, sizes, apply, rng);

        // a vertex assignment is simplicial iff every facet lands on a simplex of each fiber above
        auto simplicial = [&](const std::vector<std::size_t>& choice) {
            for (std::size_t q : above)
                for (const auto& facet : fibers[p].facets()) {
                    Simplex image;
                    for (std::size_t x : facet)
                        image.push_back(families[choice[x]][q]);
                    std::sort(image.begin(), image.end());
                    image.erase(std::unique(image.begin(), image.end()), image.end());
                    if (!fibers[q].contains(image))
                        return false;
                }
            return true;
        };
        std::vector<std::size_t> choice(sizes[p], 0);
        for (int attempt = 0; attempt < 30; ++attempt) {
            std::vector<std::size_t> candidate(sizes[p], 0);
            for (std::size_t x = 1; x < sizes[p]; ++x)
                candidate[x] = rng.below(families.size());
            if (simplicial(candidate)) {
                choice = std::move(candidate);
                break;
            }
        }
        for (std::size_t q : above) {
            table[p][q].resize(sizes[p]);
            for (std::size_t x = 0; x < sizes[p]; ++x)
                table[p][q][x] = families[choice[x]][q];
        }
    }

    std::vector<std::tuple<std::size_t, std::size_t, SimplicialMap>> transitions;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q : index.upper_covers(p))
            transitions.emplace_back(p, q, SimplicialMap(fibers[p], fibers[q], table[p][q]));
    return ComplexDiagram(index, std::move(fibers), transitions);
}

}  // namespace finhtop
