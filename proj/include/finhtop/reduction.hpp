#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "finhtop/homology.hpp"
#include "finhtop/poset.hpp"

namespace finhtop {

enum class RemovalKind { UpBeat, DownBeat, UpWeak, DownWeak, GammaUp, GammaDown };

/// "up-beat", "down-beat", "up-weak", "down-weak", "gamma-up", "gamma-down".
std::string to_string(RemovalKind kind);
std::optional<RemovalKind> parse_removal_kind(const std::string& text);

/// True for the kinds that look at the strict up-set F̂_x.
bool is_up_kind(RemovalKind kind);

struct RemovalStep {
    std::string element;
    RemovalKind kind;

    bool operator==(const RemovalStep& o) const { return element == o.element && kind == o.kind; }
};

/// Elements removed one at a time, each claimed to be of its kind at removal time.
using RemovalSequence = std::vector<RemovalStep>;

constexpr std::size_t kDefaultStateBudget = 100000;
constexpr std::size_t kDefaultGammaDepth = 3;

struct ReductionBudget {
    /// Search states visited across one oracle call, nested calls included.
    std::size_t states = kDefaultStateBudget;
    /// Nesting depth for γ-point recognition; 0 restricts the search to weak points.
    std::size_t gamma_depth = kDefaultGammaDepth;
};

/// F̂_x has a minimum.
bool is_up_beat(const FinitePoset& poset, const std::string& x);
/// Û_x has a maximum.
bool is_down_beat(const FinitePoset& poset, const std::string& x);

struct CoreResult {
    FinitePoset core;
    RemovalSequence steps;
};

/**
 * Stong core: repeatedly remove the first beat point in scan order (the
 * linear extension of the poset unless given) until none is left.
 * Throws EmptyPoset.
 */
CoreResult core(const FinitePoset& poset);
CoreResult core(const FinitePoset& poset, const std::vector<std::string>& scan_order);

/// Dismantlable: the core is a single point.  Throws EmptyPoset.
bool is_contractible(const FinitePoset& poset);

/// Û_x is nonempty and contractible.
bool is_down_weak(const FinitePoset& poset, const std::string& x);
/// F̂_x is nonempty and contractible.
bool is_up_weak(const FinitePoset& poset, const std::string& x);

struct CollapseResult {
    std::optional<RemovalSequence> sequence;
    /// Every reachable state was visited, so absence is definitive.
    bool exhausted = false;
    std::size_t states = 0;

    bool found() const noexcept { return sequence.has_value(); }
};

/**
 * Depth-first search for a sequence of elementary collapses (weak-point
 * removals) down to a single point, visiting at most `budget` states.
 * Beat points are tried before other weak points.  Throws EmptyPoset.
 */
CollapseResult collapse_search(const FinitePoset& poset, std::size_t budget = kDefaultStateBudget);

enum class Verdict { Trivial, NonTrivial, Unknown };

std::string to_string(Verdict verdict);

/**
 * Three-valued answer to "is this poset homotopically trivial".
 *
 * Trivial carries a removal sequence ending at a single point; NonTrivial
 * carries either emptiness or a homology certificate with nonzero reduced
 * homology; Unknown carries the reason the search gave up.
 */
struct Triviality {
    Verdict verdict = Verdict::Unknown;
    RemovalSequence reduction;
    std::optional<HomologyProfile> certificate;
    std::string reason;
};

/**
 * Layered decision: empty -> NonTrivial; core is a point -> Trivial;
 * nonzero reduced homology -> NonTrivial; collapse search, then search over
 * γ-point removals (nested up to budget.gamma_depth) -> Trivial; otherwise
 * Unknown.  Never wrong.
 */
Triviality triviality_oracle(const FinitePoset& poset, const ReductionBudget& budget = {});

/**
 * Û_x or F̂_x homotopically trivial.  Trivial if either side is, with the
 * trivial side's reduction and `reason` naming the side ("down" or "up");
 * NonTrivial if both are NonTrivial; Unknown otherwise.
 */
Triviality is_gamma_point(const FinitePoset& poset, const std::string& x, const ReductionBudget& budget = {});

/// Replays the sequence, checking each claimed kind at removal time.  Throws UnknownElement.
bool verify_removal_sequence(const FinitePoset& poset, const RemovalSequence& sequence,
                             const ReductionBudget& budget = {});

/// What is left after replaying; std::nullopt when some step is invalid.
std::optional<FinitePoset> replay_removal_sequence(const FinitePoset& poset, const RemovalSequence& sequence,
                                                   const ReductionBudget& budget = {});

/// Receives every oracle answer, nested calls included, with the poset it was computed on.
using OracleObserver = std::function<void(const FinitePoset&, const Triviality&)>;

/// Installs a process-wide observer (empty to remove); used for auditing.
void set_oracle_observer(OracleObserver observer);

namespace detail {

/// Mask-level primitives over a fixed parent poset; `alive` selects the current subspace.
bool up_beat_in(const FinitePoset& poset, const Bits& alive, std::size_t x);
bool down_beat_in(const FinitePoset& poset, const Bits& alive, std::size_t x);
bool contractible_in(const FinitePoset& poset, const Bits& alive);
Bits strict_up_in(const FinitePoset& poset, const Bits& alive, std::size_t x);
Bits strict_down_in(const FinitePoset& poset, const Bits& alive, std::size_t x);

/// Whether x has the claimed kind inside `alive`.
bool has_kind(const FinitePoset& poset, const Bits& alive, std::size_t x, RemovalKind kind,
              const ReductionBudget& budget);

/// Oracle on the induced subposet selected by `members`.
Triviality oracle_on(const FinitePoset& poset, const Bits& members, const ReductionBudget& budget);

}  // namespace detail

}  // namespace finhtop
