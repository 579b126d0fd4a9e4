#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "finhtop/diagram.hpp"
#include "finhtop/poset.hpp"
#include "finhtop/simplicial.hpp"

namespace finhtop {

/// Seeded generator with platform-independent integer and real draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n); n > 0.
    std::size_t below(std::size_t n);
    /// Uniform in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    /// Uniform in [0, 1).
    double unit();
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

/// Seed of the i-th instance of a run started from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i);

/// Identifiers prefix0, prefix1, ... zero-padded to a common width.
std::vector<std::string> numbered_ids(std::size_t n, const std::string& prefix);

/**
 * n elements in a fixed order; each pair i < j is related with probability
 * `density`.  Density 0 gives an antichain, density 1 a chain.  Throws
 * std::invalid_argument for n = 0.
 */
FinitePoset random_poset(std::size_t n, double density, std::uint64_t seed);
FinitePoset random_poset(std::size_t n, double density, Rng& rng, const std::string& prefix = "x");

/// Random order-preserving map; `pin` fixes the image of one source element.
PosetMap random_map(const FinitePoset& source, const FinitePoset& target, Rng& rng,
                    std::optional<std::pair<std::size_t, std::size_t>> pin = std::nullopt);

/**
 * Random diagram over `index` with fibers of 1..fiber_size elements.  Each
 * fiber's first element is a basepoint preserved by every transition.
 * Transitions out of p are chosen top-down as a map from X_p into the poset of
 * compatible families over F̂_p, so functoriality holds by construction.
 */
PosetDiagram random_diagram(const FinitePoset& index, std::size_t fiber_size, Rng& rng);
PosetDiagram random_diagram(std::size_t index_size, std::size_t fiber_size, std::uint64_t seed);

/// v vertices, facets of dimension at most max_dim, every vertex covered.
SimplicialComplex random_complex(std::size_t v, std::uint64_t seed, int max_dim = 2);
SimplicialComplex random_complex(std::size_t v, Rng& rng, int max_dim = 2);

/// Complex-valued analogue of random_diagram, fibers with 1..vertices vertices.
ComplexDiagram random_complex_diagram(const FinitePoset& index, std::size_t vertices, Rng& rng);

}  // namespace finhtop
