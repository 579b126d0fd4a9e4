#include "finhtop/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <stdexcept>
#include <thread>

#include "finhtop/errors.hpp"
#include "finhtop/io.hpp"
#include "finhtop/random.hpp"

namespace finhtop {

std::string to_string(HypothesisStatus status)
{
    switch (status) {
    case HypothesisStatus::Established: return "established";
    case HypothesisStatus::NotEstablished: return "not-established";
    case HypothesisStatus::OracleUnknown: return "oracle-unknown";
    }
    return "?";
}

std::string to_string(ConclusionStatus status)
{
    switch (status) {
    case ConclusionStatus::Verified: return "verified";
    case ConclusionStatus::Refuted: return "refuted";
    case ConclusionStatus::Skipped: return "skipped";
    }
    return "?";
}

std::string to_string(Evidence evidence)
{
    switch (evidence) {
    case Evidence::Structural: return "structural";
    case Evidence::Certified: return "certified";
    case Evidence::Constructive: return "constructive";
    case Evidence::Homology: return "homology";
    }
    return "?";
}

const RemovalSequence* CheckReport::sequence(const std::string& name) const
{
    for (const auto& [n, s] : sequences)
        if (n == name)
            return &s;
    return nullptr;
}

const HomologyProfile* CheckReport::profile(const std::string& name) const
{
    for (const auto& [n, p] : profiles)
        if (n == name)
            return &p;
    return nullptr;
}

const std::vector<std::string>& theorem_ids()
{
    static const std::vector<std::string> ids = {"ubp",        "maximum",  "homotopy",    "dbp",
                                                 "dbpgen",     "up-wp",    "cofinality",  "thomason",
                                                 "barycentric", "index-contractible", "gamma-index"};
    return ids;
}

namespace {

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string quoted(const std::string& id) { return "'" + id + "'"; }

Bits full_mask(std::size_t n)
{
    Bits all(n);
    all.set();
    return all;
}

/// Sources mapped into `members` of the target.
Bits preimage_mask(const PosetMap& f, const Bits& members)
{
    Bits out(f.source().size());
    for (std::size_t x = 0; x < f.source().size(); ++x)
        if (members.test(f(x)))
            out.set(x);
    return out;
}

void not_established(CheckReport& r, std::string reason)
{
    r.hypothesis = HypothesisStatus::NotEstablished;
    r.hypothesis_reason = std::move(reason);
    r.conclusion = ConclusionStatus::Skipped;
}

void oracle_unknown(CheckReport& r, std::string reason)
{
    r.hypothesis = HypothesisStatus::OracleUnknown;
    r.hypothesis_reason = std::move(reason);
    r.conclusion = ConclusionStatus::Skipped;
}

void refute(CheckReport& r, const std::string& why, const Json& inputs)
{
    r.conclusion = ConclusionStatus::Refuted;
    r.notes.push_back(why);
    if (!r.counterexample)
        r.counterexample = inputs.dump();
}

CheckReport finish(CheckReport r, const Stopwatch& watch)
{
    if (r.hypothesis == HypothesisStatus::Established && r.conclusion == ConclusionStatus::Skipped)
        r.conclusion = ConclusionStatus::Verified;
    r.seconds = watch.seconds();
    return r;
}

/// The hocolim of a diagram together with the set of points still present.
struct Total {
    explicit Total(const PosetDiagram& d)
        : diagram(d), poset(hocolim(d)), offsets(hocolim_offsets(d)), alive(full_mask(poset.size()))
    {
    }

    std::size_t at(std::size_t p, std::size_t x) const { return offsets[p] + x; }
    FinitePoset remainder() const { return subposet(poset, alive); }

    const PosetDiagram& diagram;
    FinitePoset poset;
    std::vector<std::size_t> offsets;
    Bits alive;
};

enum class Side { Up, Down };
/// Weakest kind of point accepted during a fiber removal.
enum class Strength { Beat, Weak, Gamma };

struct FiberRemoval {
    std::optional<std::string> failure;
    std::vector<std::string> unconfirmed;
};

/**
 * Removes the fiber over p from the hocolim one point at a time.  Up side:
 * along a linear extension of the fiber's opposite; down side: along a
 * linear extension of the fiber.  Each point is classified at removal time
 * by the strongest kind that applies on the chosen side.
 */
FiberRemoval remove_fiber(Total& t, std::size_t p, Side side, Strength strength, const ReductionBudget& budget,
                          RemovalSequence& sequence)
{
    FiberRemoval result;
    const FinitePoset& fiber = t.diagram.fiber(p);
    const auto order = side == Side::Up ? linear_extension_indices(opposite(fiber)) : linear_extension_indices(fiber);
    for (std::size_t x : order) {
        const std::size_t i = t.at(p, x);
        const std::string& name = t.poset.element(i);
        const bool up = side == Side::Up;
        const Bits strict = up ? detail::strict_up_in(t.poset, t.alive, i) : detail::strict_down_in(t.poset, t.alive, i);
        std::optional<RemovalKind> kind;
        if (up ? detail::up_beat_in(t.poset, t.alive, i) : detail::down_beat_in(t.poset, t.alive, i)) {
            kind = up ? RemovalKind::UpBeat : RemovalKind::DownBeat;
        } else if (strength != Strength::Beat && detail::contractible_in(t.poset, strict)) {
            kind = up ? RemovalKind::UpWeak : RemovalKind::DownWeak;
        } else if (strength == Strength::Gamma) {
            const Verdict v = detail::oracle_on(t.poset, strict, budget).verdict;
            if (v != Verdict::NonTrivial)
                kind = up ? RemovalKind::GammaUp : RemovalKind::GammaDown;
            if (v == Verdict::Unknown)
                result.unconfirmed.push_back(name);
        }
        if (!kind) {
            result.failure = name;
            return result;
        }
        sequence.push_back({name, *kind});
        t.alive.reset(i);
    }
    return result;
}

std::string strength_name(Strength s, Side side)
{
    const std::string dir = side == Side::Up ? "up " : "down ";
    switch (s) {
    case Strength::Beat: return dir + "beat point";
    case Strength::Weak: return dir + "weak point";
    case Strength::Gamma: return dir + "gamma-point";
    }
    return "?";
}

/// Removes the fiber over p, recording the sequence and refuting on failure; false on failure.
bool replay_fiber(CheckReport& r, Total& t, std::size_t p, Side side, Strength strength, const ReductionBudget& budget,
                  RemovalSequence& sequence, const Json& inputs)
{
    const auto removal = remove_fiber(t, p, side, strength, budget, sequence);
    for (const auto& name : removal.unconfirmed)
        r.notes.push_back("oracle inconclusive on the strict set of " + quoted(name) + "; step kept unconfirmed");
    if (removal.failure) {
        refute(r, quoted(*removal.failure) + " is not a " + strength_name(strength, side) + " when removed", inputs);
        return false;
    }
    return true;
}

/// Compares the remainder with the restricted hocolim, structurally and in homology.
void compare_with_restriction(CheckReport& r, const Total& t, const Bits& kept, const Json& inputs,
                              const std::string& restricted_name = "restricted")
{
    const FinitePoset restricted = hocolim(restrict(t.diagram, kept));
    if (t.remainder() != restricted)
        refute(r, "the remainder differs from the restricted homotopy colimit", inputs);
    HomologyProfile whole = poset_homology(t.poset);
    HomologyProfile part = poset_homology(restricted);
    if (whole != part)
        refute(r, "homology profiles differ", inputs);
    r.profiles.emplace_back("hocolim", std::move(whole));
    r.profiles.emplace_back(restricted_name, std::move(part));
}

/// q is the maximum of the strict down-set of p within `alive`.
bool dominated_by(const FinitePoset& index, const Bits& alive, std::size_t p, std::size_t q)
{
    const Bits below = detail::strict_down_in(index, alive, p);
    return below.test(q) && below.is_subset_of(index.below(q));
}

struct MapEvidence {
    bool holds = false;
    Evidence evidence = Evidence::Homology;
    std::string reason;
};

/**
 * Evidence that f is a weak equivalence.  Certified when every preimage of a
 * basic open set is homotopically trivial (the fiber lemma); otherwise the
 * homology profiles of source and target are compared.
 */
MapEvidence weak_equivalence_evidence(const PosetMap& f, const ReductionBudget& budget)
{
    bool certified = true;
    for (std::size_t y = 0; y < f.target().size() && certified; ++y)
        certified = detail::oracle_on(f.source(), preimage_mask(f, f.target().below(y)), budget).verdict ==
                    Verdict::Trivial;
    if (certified)
        return {true, Evidence::Certified, "preimages of basic open sets are homotopically trivial"};
    if (induces_homology_isomorphism(f))
        return {true, Evidence::Homology, "the map induces isomorphisms in homology"};
    return {false, Evidence::Homology, "the map does not induce isomorphisms in homology"};
}

Json diagram_point_inputs(const PosetDiagram& d, const std::string& p)
{
    return Json{{"diagram", to_json(d)}, {"p", p}};
}

Json diagram_pair_inputs(const PosetDiagram& d, const std::string& p, const std::string& q)
{
    return Json{{"diagram", to_json(d)}, {"p", p}, {"q", q}};
}

}  // namespace

CheckReport check_ubp(const PosetDiagram& diagram, const std::string& p)
{
    Stopwatch watch;
    CheckReport r;
    r.theorem = "ubp";
    const FinitePoset& index = diagram.index();
    const std::size_t pi = index.index_of(p);
    const Bits all = full_mask(index.size());
    if (!detail::up_beat_in(index, all, pi)) {
        not_established(r, quoted(p) + " is not an up beat point of the index");
        return finish(std::move(r), watch);
    }
    r.hypothesis_reason = quoted(p) + " is an up beat point of the index";
    const Json inputs = diagram_point_inputs(diagram, p);

    Total t(diagram);
    RemovalSequence sequence;
    const bool replayed = replay_fiber(r, t, pi, Side::Up, Strength::Beat, {}, sequence, inputs);
    r.conclusion_evidence = Evidence::Constructive;
    r.sequences.emplace_back("fiber-removal", std::move(sequence));
    if (replayed) {
        Bits kept = all;
        kept.reset(pi);
        compare_with_restriction(r, t, kept, inputs);
    }
    return finish(std::move(r), watch);
}

CheckReport check_maximum(const PosetDiagram& diagram)
{
    Stopwatch watch;
    CheckReport r;
    r.theorem = "maximum";
    const FinitePoset& index = diagram.index();
    const auto top = maximum(index);
    if (!top) {
        not_established(r, "the index has no maximum");
        return finish(std::move(r), watch);
    }
    r.hypothesis_reason = quoted(index.element(*top)) + " is the maximum of the index";
    const Json inputs{{"diagram", to_json(diagram)}};

    Total t(diagram);
    Bits present = full_mask(index.size());
    RemovalSequence sequence;
    bool ok = true;
    for (std::size_t p : linear_extension_indices(opposite(index))) {
        if (p == *top)
            continue;
        if (!detail::up_beat_in(index, present, p)) {
            refute(r, quoted(index.element(p)) + " is not an up beat point of the remaining index", inputs);
            ok = false;
            break;
        }
        if (!replay_fiber(r, t, p, Side::Up, Strength::Beat, {}, sequence, inputs)) {
            ok = false;
            break;
        }
        present.reset(p);
    }
    r.conclusion_evidence = Evidence::Constructive;
    if (ok) {
        if (!verify_removal_sequence(t.poset, sequence))
            refute(r, "the removal sequence does not replay", inputs);
        compare_with_restriction(r, t, present, inputs, "top-fiber");
        const FinitePoset& top_fiber = diagram.fiber(*top);
        if (is_contractible(top_fiber)) {
            r.notes.push_back("the fiber over the maximum is contractible");
            if (!is_contractible(t.poset))
                refute(r, "the homotopy colimit is not contractible", inputs);
        }
    }
    r.sequences.emplace_back("collapse", std::move(sequence));
    return finish(std::move(r), watch);
}

CheckReport check_homotopy_lemma(const DiagramMorphism& alpha, const ReductionBudget& budget)
{
    Stopwatch watch;
    CheckReport r;
    r.theorem = "homotopy";
    const FinitePoset& index = alpha.source().index();
    Evidence weakest = Evidence::Certified;
    for (std::size_t p = 0; p < index.size(); ++p) {
        const MapEvidence e = weak_equivalence_evidence(alpha.component(p), budget);
        if (!e.holds) {
            not_established(r, "component at " + quoted(index.element(p)) + ": " + e.reason);
            r.hypothesis_evidence = Evidence::Homology;
            return finish(std::move(r), watch);
        }
        if (e.evidence == Evidence::Homology)
            weakest = Evidence::Homology;
    }
    r.hypothesis_evidence = weakest;
    r.hypothesis_reason = weakest == Evidence::Certified ? "every component is a weak equivalence by the fiber lemma"
                                                         : "every component preserves homology";
    const Json inputs = to_json(alpha);

    const FinitePoset source = hocolim(alpha.source());
    const FinitePoset target = hocolim(alpha.target());
    const auto offsets = hocolim_offsets(alpha.target());
    std::vector<std::size_t> values;
    for (std::size_t p = 0; p < index.size(); ++p)
        for (std::size_t x = 0; x < alpha.source().fiber(p).size(); ++x)
            values.push_back(offsets[p] + alpha.component(p)(x));
    try {
        PosetMap induced(source, target, std::move(values));
        (void)induced;
    } catch (const NotOrderPreserving&) {
        refute(r, "the induced map of homotopy colimits is not order preserving", inputs);
    }
    HomologyProfile a = poset_homology(source), b = poset_homology(target);
    if (a != b)
        refute(r, "homology profiles of the homotopy colimits differ", inputs);
    r.profiles.emplace_back("source", std::move(a));
    r.profiles.emplace_back("target", std::move(b));
    return finish(std::move(r), watch);
}

CheckReport check_dbp(const PosetDiagram& diagram, const std::string& p, const std::string& q)
{
    Stopwatch watch;
    CheckReport r;
    r.theorem = "dbp";
    const FinitePoset& index = diagram.index();
    const std::size_t pi = index.index_of(p), qi = index.index_of(q);
    const Bits all = full_mask(index.size());
    if (!dominated_by(index, all, pi, qi)) {
        not_established(r, quoted(p) + " is not a down beat point dominated by " + quoted(q));
        return finish(std::move(r), watch);
    }
    const PosetMap& f = diagram.transition(qi, pi);
    const FinitePoset& fiber = diagram.fiber(pi);
    for (std::size_t x = 0; x < fiber.size(); ++x) {
        if (!detail::contractible_in(f.source(), preimage_mask(f, fiber.below(x)))) {
            not_established(r, "the preimage of U_" + fiber.element(x) + " is not contractible");
            return finish(std::move(r), watch);
        }
    }
    r.hypothesis_reason = quoted(p) + " is a down beat point dominated by " + quoted(q) +
                          " with contractible preimages of basic open sets";
    const Json inputs = diagram_pair_inputs(diagram, p, q);

    Total t(diagram);
    RemovalSequence sequence;
    const bool replayed = replay_fiber(r, t, pi, Side::Down, Strength::Weak, {}, sequence, inputs);
    r.conclusion_evidence = Evidence::Constructive;
    r.sequences.emplace_back("fiber-removal", std::move(sequence));
    if (replayed) {
        Bits kept = all;
        kept.reset(pi);
        compare_with_restriction(r, t, kept, inputs);
    }
    return finish(std::move(r), watch);
}

CheckReport check_dbpgen(const PosetDiagram& diagram, const std::string& p, const std::string& q,
                         const ReductionBudget& budget)
{
    Stopwatch watch;
    CheckReport r;
    r.theorem = "dbpgen";
    const FinitePoset& index = diagram.index();
    const std::size_t pi = index.index_of(p), qi = index.index_of(q);
    const Bits all = full_mask(index.size());
    if (!dominated_by(index, all, pi, qi)) {
        not_established(r, quoted(p) + " is not a down beat point dominated by " + quoted(q));
        return finish(std::move(r), watch);
    }
    const MapEvidence e = weak_equivalence_evidence(diagram.transition(qi, pi), budget);
    r.hypothesis_evidence = e.evidence;
    if (!e.holds) {
        not_established(r, "transition " + q + "->" + p + ": " + e.reason);
        return finish(std::move(r), watch);
    }
    r.hypothesis_reason = "transition " + q + "->" + p + ": " + e.reason;
    const Json inputs = diagram_pair_inputs(diagram, p, q);

    // the retraction r of the index onto P \ {p} and the morphism (ir)*X -> X
    std::vector<std::size_t> retraction(index.size());
    for (std::size_t s = 0; s < index.size(); ++s)
        retraction[s] = s == pi ? qi : s;
    const PosetMap ir(index, index, retraction);
    const PosetDiagram pulled = pullback(ir, diagram);
    std::vector<PosetMap> components;
    for (std::size_t s = 0; s < index.size(); ++s)
        components.push_back(diagram.transition(retraction[s], s));
    try {
        DiagramMorphism gamma(pulled, diagram, std::move(components));
        (void)gamma;
    } catch (const NotNatural&) {
        refute(r, "the comparison morphism is not natural", inputs);
    }

    // over the pulled-back diagram p is dominated by q through an identity, so the constructive case applies
    const CheckReport pulled_check = check_dbp(pulled, p, q);
    if (pulled_check.conclusion == ConclusionStatus::Refuted)
        refute(r, "removing the fiber of the pulled-back diagram failed", inputs);
    if (const auto* seq = pulled_check.sequence("fiber-removal"))
        r.sequences.emplace_back("pulled-back-removal", *seq);

    Bits kept = all;
    kept.reset(pi);
    HomologyProfile whole = poset_homology(hocolim(diagram));
    HomologyProfile part = poset_homology(hocolim(restrict(diagram, kept)));
    HomologyProfile back = poset_homology(hocolim(pulled));
    if (whole != part || whole != back)
        refute(r, "homology profiles differ", inputs);
    r.profiles.emplace_back("hocolim", std::move(whole));
    r.profiles.emplace_back("restricted", std::move(part));
    r.profiles.emplace_back("pulled-back", std::move(back));
    return finish(std::move(r), watch);
}

CheckReport check_up_wp(const PosetDiagram& diagram, const std::string& p, const ReductionBudget& budget)
{
    Stopwatch watch;
    CheckReport r;
    r.theorem = "up-wp";
    const FinitePoset& index = diagram.index();
    const std::size_t pi = index.index_of(p);
    const Bits all = full_mask(index.size());
    const Triviality hyp = detail::oracle_on(index, detail::strict_up_in(index, all, pi), budget);
    r.hypothesis_evidence = Evidence::Certified;
    if (hyp.verdict == Verdict::NonTrivial) {
        not_established(r, "the strict up-set of " + quoted(p) + " is not homotopically trivial (" + hyp.reason + ")");
        return finish(std::move(r), watch);
    }
    if (hyp.verdict == Verdict::Unknown) {
        oracle_unknown(r, "strict up-set of " + quoted(p) + ": " + hyp.reason);
        return finish(std::move(r), watch);
    }
    r.hypothesis_reason = "the strict up-set of " + quoted(p) + " is homotopically trivial (" + hyp.reason + ")";
    r.sequences.emplace_back("strict-up-set-reduction", hyp.reduction);
    const Json inputs = diagram_point_inputs(diagram, p);

    Total t(diagram);
    RemovalSequence sequence;
    const bool replayed = replay_fiber(r, t, pi, Side::Up, Strength::Gamma, budget, sequence, inputs);
    r.conclusion_evidence = Evidence::Constructive;
    r.sequences.emplace_back("fiber-removal", std::move(sequence));
    if (replayed) {
        Bits kept = all;
        kept.reset(pi);
        compare_with_restriction(r, t, kept, inputs);
    }
    return finish(std::move(r), watch);
}

FinitePoset cofinality_poset(const PosetMap& phi)
{
    const FinitePoset& P = phi.source();
    const FinitePoset& Q = phi.target();
    std::vector<std::string> elements;
    for (const auto& q : Q.elements())
        elements.push_back("Q/" + q);
    for (const auto& p : P.elements())
        elements.push_back("P/" + p);
    const std::size_t m = Q.size();
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b : Q.upper_covers(a))
            relations.emplace_back(a, b);
    for (std::size_t a = 0; a < P.size(); ++a) {
        for (std::size_t b : P.upper_covers(a))
            relations.emplace_back(m + a, m + b);
        relations.emplace_back(phi(a), m + a);
    }
    return FinitePoset::from_index_relations(std::move(elements), relations);
}

PosetDiagram cofinality_diagram(const PosetMap& phi, const PosetDiagram& diagram)
{
    if (phi.target() != diagram.index())
        throw DomainMismatch("cofinality map does not land in the diagram's index");
    const FinitePoset R = cofinality_poset(phi);
    const std::size_t m = phi.target().size();
    // where each element of R sits in the original index
    std::vector<std::size_t> base(R.size());
    std::vector<FinitePoset> fibers;
    for (std::size_t i = 0; i < R.size(); ++i) {
        base[i] = i < m ? i : phi(i - m);
        fibers.push_back(diagram.fiber(base[i]));
    }
    std::vector<std::tuple<std::size_t, std::size_t, PosetMap>> transitions;
    for (std::size_t a = 0; a < R.size(); ++a)
        for (std::size_t b : R.upper_covers(a))
            transitions.emplace_back(a, b, diagram.transition(base[a], base[b]));
    return PosetDiagram(R, std::move(fibers), transitions);
}

CheckReport check_cofinality(const PosetMap& phi, const PosetDiagram& diagram, const ReductionBudget& budget)
{
    Stopwatch watch;
    CheckReport r;
    r.theorem = "cofinality";
    if (phi.target() != diagram.index())
        throw DomainMismatch("cofinality map does not land in the diagram's index");
    const FinitePoset& P = phi.source();
    const FinitePoset& Q = phi.target();
    r.hypothesis_evidence = Evidence::Certified;
    std::vector<std::string> nontrivial, unknown;
    for (std::size_t q = 0; q < Q.size(); ++q) {
        const Verdict v = detail::oracle_on(P, preimage_mask(phi, Q.above(q)), budget).verdict;
        if (v == Verdict::NonTrivial)
            nontrivial.push_back(Q.element(q));
        else if (v == Verdict::Unknown)
            unknown.push_back(Q.element(q));
    }
    auto join = [](const std::vector<std::string>& ids) {
        std::string out;
        for (const auto& id : ids)
            out += (out.empty() ? "" : ", ") + quoted(id);
        return out;
    };
    if (!nontrivial.empty()) {
        not_established(r, "preimages of F_q are not homotopically trivial for " + join(nontrivial));
        return finish(std::move(r), watch);
    }
    if (!unknown.empty()) {
        oracle_unknown(r, "oracle inconclusive on the preimages of F_q for " + join(unknown));
        return finish(std::move(r), watch);
    }
    r.hypothesis_reason = "every preimage of F_q is homotopically trivial";
    const Json inputs{{"phi", to_json(phi)}, {"diagram", to_json(diagram)}};

    try {
        (void)canonical_map(phi, diagram);
    } catch (const NotOrderPreserving&) {
        refute(r, "the canonical map is not order preserving", inputs);
    }
    HomologyProfile pulled = poset_homology(hocolim(pullback(phi, diagram)));
    HomologyProfile whole = poset_homology(hocolim(diagram));
    if (pulled != whole)
        refute(r, "homology profiles differ", inputs);

    // replay both removal phases over the mixed poset
    const PosetDiagram mixed = cofinality_diagram(phi, diagram);
    const FinitePoset& R = mixed.index();
    const std::size_t m = Q.size();
    Bits q_part(R.size()), p_part(R.size());
    for (std::size_t i = 0; i < R.size(); ++i)
        (i < m ? q_part : p_part).set(i);
    r.conclusion_evidence = Evidence::Constructive;

    {
        Total t(mixed);
        Bits present = full_mask(R.size());
        RemovalSequence sequence;
        bool ok = true;
        for (std::size_t q : linear_extension_indices(opposite(Q))) {
            const Bits expected = preimage_mask(phi, Q.above(q));
            const Bits strict = detail::strict_up_in(R, present, q);
            bool same = strict.is_subset_of(p_part);
            for (std::size_t p = 0; p < P.size() && same; ++p)
                same = strict.test(m + p) == expected.test(p);
            if (!same) {
                refute(r, "the strict up-set of " + quoted(R.element(q)) + " is not the preimage of F_q", inputs);
                ok = false;
                break;
            }
            if (!replay_fiber(r, t, q, Side::Up, Strength::Gamma, budget, sequence, inputs)) {
                ok = false;
                break;
            }
            present.reset(q);
        }
        if (ok && (t.remainder() != hocolim(restrict(mixed, p_part)) || poset_homology(t.remainder()) != pulled))
            refute(r, "the up phase does not end at the pulled-back homotopy colimit", inputs);
        r.sequences.emplace_back("up-phase", std::move(sequence));
    }
    {
        Total t(mixed);
        Bits present = full_mask(R.size());
        RemovalSequence sequence;
        bool ok = true;
        for (std::size_t p : linear_extension_indices(P)) {
            if (!dominated_by(R, present, m + p, phi(p))) {
                refute(r, quoted(R.element(m + p)) + " is not a down beat point dominated by its image", inputs);
                ok = false;
                break;
            }
            if (!replay_fiber(r, t, m + p, Side::Down, Strength::Weak, budget, sequence, inputs)) {
                ok = false;
                break;
            }
            present.reset(m + p);
        }
        if (ok && (t.remainder() != hocolim(restrict(mixed, q_part)) || poset_homology(t.remainder()) != whole))
            refute(r, "the down phase does not end at the homotopy colimit", inputs);
        r.sequences.emplace_back("down-phase", std::move(sequence));
    }
    r.profiles.emplace_back("pullback", std::move(pulled));
    r.profiles.emplace_back("hocolim", std::move(whole));
    return finish(std::move(r), watch);
}

CheckReport check_thomason_roundtrip(const PosetDiagram& diagram)
{
    Stopwatch watch;
    CheckReport r;
    r.theorem = "thomason";
    r.hypothesis_reason = "a diagram of finite posets";
    HomologyProfile a = poset_homology(hocolim(diagram));
    HomologyProfile b = poset_homology(hocolim(lift_face_poset_op(lift_order_complex(diagram))));
    if (a != b)
        refute(r, "homology profiles differ", Json{{"diagram", to_json(diagram)}});
    r.profiles.emplace_back("hocolim", std::move(a));
    r.profiles.emplace_back("face-poset-hocolim", std::move(b));
    return finish(std::move(r), watch);
}

CheckReport check_barycentric(const ComplexDiagram& diagram)
{
    Stopwatch watch;
    CheckReport r;
    r.theorem = "barycentric";
    r.hypothesis_reason = "a diagram of finite simplicial complexes";
    const Json inputs{{"diagram", to_json(diagram)}};
    const ComplexDiagram subdivided = barycentric_diagram(diagram);
    for (std::size_t p = 0; p < diagram.index().size(); ++p)
        if (euler_characteristic(subdivided.fiber(p)) != euler_characteristic(diagram.fiber(p)))
            refute(r, "Euler characteristic changes under subdivision at " + quoted(diagram.index().element(p)),
                   inputs);
    HomologyProfile a = poset_homology(hocolim(lift_face_poset_op(diagram)));
    HomologyProfile b = poset_homology(hocolim(lift_face_poset_op(subdivided)));
    if (a != b)
        refute(r, "homology profiles differ", inputs);
    r.profiles.emplace_back("hocolim", std::move(a));
    r.profiles.emplace_back("subdivided-hocolim", std::move(b));
    return finish(std::move(r), watch);
}

namespace {

/// The conclusion shared by the index corollaries: the hocolim has the homology of every fiber.
void compare_with_fibers(CheckReport& r, const ComplexDiagram& diagram, const HomologyProfile& total,
                         const Json& inputs)
{
    for (std::size_t p = 0; p < diagram.index().size(); ++p) {
        HomologyProfile fiber = homology_profile(diagram.fiber(p));
        if (fiber != total)
            refute(r, "the homotopy colimit and the fiber at " + quoted(diagram.index().element(p)) +
                          " have different homology",
                   inputs);
        if (p == 0)
            r.profiles.emplace_back("fiber", std::move(fiber));
    }
    r.profiles.emplace_back("hocolim", total);
}

}  // namespace

CheckReport check_index_contractible(const ComplexDiagram& diagram, const ReductionBudget& budget)
{
    Stopwatch watch;
    CheckReport r;
    r.theorem = "index-contractible";
    const FinitePoset& index = diagram.index();
    const CoreResult reduced = core(index);
    if (reduced.core.size() != 1) {
        not_established(r, "the index is not dismantlable");
        return finish(std::move(r), watch);
    }
    r.hypothesis_evidence = Evidence::Certified;
    for (const auto& [p, q] : index.covers()) {
        const MapEvidence e = weak_equivalence_evidence(face_poset_op_map(diagram.transition(p, q)), budget);
        if (!e.holds) {
            r.hypothesis_evidence = Evidence::Homology;
            not_established(r, "transition " + p + "->" + q + ": " + e.reason);
            return finish(std::move(r), watch);
        }
        if (e.evidence == Evidence::Homology)
            r.hypothesis_evidence = Evidence::Homology;
    }
    r.hypothesis_reason = "the index is dismantlable and every transition is a homotopy equivalence";
    r.sequences.emplace_back("index-reduction", reduced.steps);
    const Json inputs{{"diagram", to_json(diagram)}};

    // remove index beat points one at a time through the poset-level checks
    const PosetDiagram faces = lift_face_poset_op(diagram);
    Bits present = full_mask(index.size());
    for (const auto& step : reduced.steps) {
        const std::size_t s = index.index_of(step.element);
        const PosetDiagram current = restrict(faces, present);
        CheckReport sub;
        if (step.kind == RemovalKind::UpBeat) {
            sub = check_up_wp(current, step.element, budget);
        } else {
            const Bits below = detail::strict_down_in(index, present, s);
            std::size_t q = below.find_first();
            for (auto c = below.find_first(); c != Bits::npos; c = below.find_next(c))
                if (below.is_subset_of(index.below(c)))
                    q = c;
            sub = check_dbpgen(current, step.element, index.element(q), budget);
        }
        if (sub.conclusion == ConclusionStatus::Refuted)
            refute(r, "removing index point " + quoted(step.element) + " failed: " + sub.notes.back(), inputs);
        else if (sub.conclusion == ConclusionStatus::Skipped)
            r.notes.push_back("step " + quoted(step.element) + " skipped: " + sub.hypothesis_reason);
        present.reset(s);
    }
    r.conclusion_evidence = Evidence::Constructive;
    compare_with_fibers(r, diagram, poset_homology(hocolim(faces)), inputs);
    return finish(std::move(r), watch);
}

CheckReport check_gamma_index(const ComplexDiagram& diagram, const ReductionBudget& budget)
{
    Stopwatch watch;
    CheckReport r;
    r.theorem = "gamma-index";
    const FinitePoset& index = diagram.index();
    const Triviality reduction = triviality_oracle(index, budget);
    r.hypothesis_evidence = Evidence::Certified;
    if (reduction.verdict == Verdict::NonTrivial) {
        not_established(r, "the index is not homotopically trivial (" + reduction.reason + ")");
        return finish(std::move(r), watch);
    }
    if (reduction.verdict == Verdict::Unknown) {
        oracle_unknown(r, "index: " + reduction.reason);
        return finish(std::move(r), watch);
    }
    const Json inputs{{"diagram", to_json(diagram)}};

    // decide a side for each removed index point, checking the contractible-mapping criterion on the down side
    struct Plan {
        std::size_t point;
        Side side;
    };
    std::vector<Plan> plan;
    Bits present = full_mask(index.size());
    for (const auto& step : reduction.reduction) {
        const std::size_t s = index.index_of(step.element);
        Side side = is_up_kind(step.kind) ? Side::Up : Side::Down;
        if (side == Side::Down &&
            detail::oracle_on(index, detail::strict_up_in(index, present, s), budget).verdict == Verdict::Trivial)
            side = Side::Up;
        if (side == Side::Down) {
            const Bits below = detail::strict_down_in(index, present, s);
            for (auto q = below.find_first(); q != Bits::npos; q = below.find_next(q)) {
                const PosetMap f = face_poset_op_map(diagram.transition(q, s));
                for (const auto& sigma : f.target().elements()) {
                    const Verdict v = triviality_oracle(preimage_poset(f, sigma), budget).verdict;
                    const std::string locus = "simplex " + sigma + " under " + index.element(q) + "->" + step.element;
                    if (v == Verdict::NonTrivial) {
                        not_established(r, "preimage of " + locus + " is not homotopically trivial");
                        return finish(std::move(r), watch);
                    }
                    if (v == Verdict::Unknown) {
                        oracle_unknown(r, "oracle inconclusive on the preimage of " + locus);
                        return finish(std::move(r), watch);
                    }
                }
            }
        }
        plan.push_back({s, side});
        present.reset(s);
    }
    r.hypothesis_reason = "the index reduces to a point by gamma-points and the relevant transitions satisfy the "
                          "preimage criterion";
    r.sequences.emplace_back("index-reduction", reduction.reduction);

    const PosetDiagram faces = lift_face_poset_op(diagram);
    Total t(faces);
    RemovalSequence sequence;
    bool ok = true;
    for (const auto& step : plan)
        if (!replay_fiber(r, t, step.point, step.side, Strength::Gamma, budget, sequence, inputs)) {
            ok = false;
            break;
        }
    r.conclusion_evidence = Evidence::Constructive;
    r.sequences.emplace_back("fiber-removal", std::move(sequence));
    const HomologyProfile total = poset_homology(t.poset);
    if (ok && (t.remainder() != hocolim(restrict(faces, present)) || poset_homology(t.remainder()) != total))
        refute(r, "the removal does not end at a single fiber with the same homology", inputs);
    compare_with_fibers(r, diagram, total, inputs);
    return finish(std::move(r), watch);
}

PosetDiagram product_diagram(const PosetDiagram& diagram, const FinitePoset& factor)
{
    const FinitePoset& index = diagram.index();
    const std::size_t m = factor.size();
    std::vector<FinitePoset> fibers;
    for (const auto& fiber : diagram.fibers())
        fibers.push_back(product(fiber, factor));
    std::vector<std::tuple<std::size_t, std::size_t, PosetMap>> transitions;
    for (std::size_t p = 0; p < index.size(); ++p)
        for (std::size_t q : index.upper_covers(p)) {
            const PosetMap& f = diagram.transition(p, q);
            std::vector<std::size_t> values;
            for (std::size_t x = 0; x < f.source().size(); ++x)
                for (std::size_t c = 0; c < m; ++c)
                    values.push_back(f(x) * m + c);
            transitions.emplace_back(p, q, PosetMap(fibers[p], fibers[q], std::move(values)));
        }
    return PosetDiagram(index, std::move(fibers), transitions);
}

DiagramMorphism product_projection(const PosetDiagram& diagram, const FinitePoset& factor)
{
    PosetDiagram source = product_diagram(diagram, factor);
    const std::size_t m = factor.size();
    std::vector<PosetMap> components;
    for (std::size_t p = 0; p < diagram.index().size(); ++p) {
        std::vector<std::size_t> values;
        for (std::size_t i = 0; i < source.fiber(p).size(); ++i)
            values.push_back(i / m);
        components.emplace_back(source.fiber(p), diagram.fiber(p), std::move(values));
    }
    return DiagramMorphism(std::move(source), diagram, std::move(components));
}

FinitePoset w_poset()
{
    std::vector<std::string> elements;
    for (int i = 1; i <= 11; ++i)
        elements.push_back(std::to_string(i));
    return FinitePoset(elements, {{"1", "5"},  {"1", "6"},  {"2", "5"},  {"2", "7"},  {"3", "6"},  {"3", "8"},
                                  {"4", "7"},  {"4", "8"},  {"5", "9"},  {"5", "10"}, {"6", "9"},  {"6", "10"},
                                  {"7", "10"}, {"7", "11"}, {"8", "10"}, {"8", "11"}});
}

FinitePoset circle_poset() { return FinitePoset({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}); }

namespace {

/// P with one extra element `id` placed below each element of `above` (by index).
FinitePoset adjoin_below(const FinitePoset& poset, const std::string& id, const std::vector<std::size_t>& above)
{
    std::vector<std::string> elements = poset.elements();
    elements.push_back(id);
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (std::size_t a = 0; a < poset.size(); ++a)
        for (std::size_t b : poset.upper_covers(a))
            relations.emplace_back(a, b);
    for (std::size_t b : above)
        relations.emplace_back(poset.size(), b);
    return FinitePoset::from_index_relations(std::move(elements), relations);
}

/// P with a new maximum `id`.
FinitePoset adjoin_top(const FinitePoset& poset, const std::string& id)
{
    std::vector<std::string> elements = poset.elements();
    elements.push_back(id);
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (std::size_t a = 0; a < poset.size(); ++a) {
        for (std::size_t b : poset.upper_covers(a))
            relations.emplace_back(a, b);
        relations.emplace_back(a, poset.size());
    }
    return FinitePoset::from_index_relations(std::move(elements), relations);
}

/// Removes up to `count` beat points; returns the retraction onto what is left.
PosetMap beat_retraction(const FinitePoset& poset, std::size_t count)
{
    Bits alive = full_mask(poset.size());
    std::vector<std::size_t> image(poset.size());
    for (std::size_t i = 0; i < poset.size(); ++i)
        image[i] = i;
    const auto steps = core(poset).steps;
    for (std::size_t k = 0; k < std::min(count, steps.size()); ++k) {
        const std::size_t b = poset.index_of(steps[k].element);
        const bool up = steps[k].kind == RemovalKind::UpBeat;
        const Bits strict = up ? detail::strict_up_in(poset, alive, b) : detail::strict_down_in(poset, alive, b);
        for (auto c = strict.find_first(); c != Bits::npos; c = strict.find_next(c))
            if (strict.is_subset_of(up ? poset.above(c) : poset.below(c)))
                image[b] = c;
        alive.reset(b);
    }
    const FinitePoset rest = subposet(poset, alive);
    std::vector<std::size_t> values(poset.size());
    for (std::size_t i = 0; i < poset.size(); ++i) {
        std::size_t j = i;
        while (!alive.test(j))
            j = image[j];
        values[i] = rest.index_of(poset.element(j));
    }
    return PosetMap(poset, rest, std::move(values));
}

/// D over P extended by a new element `id` whose only lower cover is q, with transition f from q.
PosetDiagram extend_above(const PosetDiagram& diagram, std::size_t q, const std::string& id, const PosetMap& f)
{
    const FinitePoset& index = diagram.index();
    std::vector<std::string> elements = index.elements();
    elements.push_back(id);
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    std::vector<std::tuple<std::size_t, std::size_t, PosetMap>> transitions;
    for (std::size_t a = 0; a < index.size(); ++a)
        for (std::size_t b : index.upper_covers(a)) {
            relations.emplace_back(a, b);
            transitions.emplace_back(a, b, diagram.transition(a, b));
        }
    relations.emplace_back(q, index.size());
    transitions.emplace_back(q, index.size(), f);
    std::vector<FinitePoset> fibers = diagram.fibers();
    fibers.push_back(f.target());
    return PosetDiagram(FinitePoset::from_index_relations(std::move(elements), relations), std::move(fibers),
                        transitions);
}

ComplexDiagram constant_complex_diagram(const FinitePoset& index, const SimplicialComplex& complex)
{
    std::vector<std::tuple<std::size_t, std::size_t, SimplicialMap>> transitions;
    for (std::size_t a = 0; a < index.size(); ++a)
        for (std::size_t b : index.upper_covers(a))
            transitions.emplace_back(a, b, identity_map(complex));
    return ComplexDiagram(index, std::vector<SimplicialComplex>(index.size(), complex), transitions);
}

FinitePoset random_index(Rng& rng, std::size_t max_size)
{
    return random_poset(rng.between(1, max_size), rng.unit(), rng, "p");
}

CheckReport random_dbp_family(Rng& rng, bool generic, const ReductionBudget& budget)
{
    const FinitePoset base = random_index(rng, 4);
    const PosetDiagram d0 = random_diagram(base, 4, rng);
    const std::size_t q = rng.below(base.size());
    const FinitePoset& fq = d0.fiber(q);
    PosetMap f = beat_retraction(fq, rng.below(3));
    if (generic && rng.chance(0.5))
        f = random_map(fq, random_poset(rng.between(1, 4), rng.unit(), rng, "y"), rng);
    const PosetDiagram d = extend_above(d0, q, "u", f);
    if (generic)
        return check_dbpgen(d, "u", base.element(q), budget);
    return check_dbp(d, "u", base.element(q));
}

PosetMap random_cofinal_map(Rng& rng)
{
    switch (rng.below(4)) {
    case 0: {
        const FinitePoset q = random_index(rng, 4);
        return identity_map(q);
    }
    case 1: {
        const FinitePoset q = random_index(rng, 3);
        const FinitePoset c = chain_poset(rng.between(1, 3), "c");
        const FinitePoset p = product(q, c);
        std::vector<std::size_t> values;
        for (std::size_t i = 0; i < p.size(); ++i)
            values.push_back(i / c.size());
        return PosetMap(p, q, std::move(values));
    }
    case 2: {
        const FinitePoset p = random_index(rng, 6);
        return beat_retraction(p, rng.between(1, 3));
    }
    default:
        return constant_map(w_poset(), point_poset("*"), "*");
    }
}

}  // namespace

CheckReport random_check(const std::string& theorem, std::uint64_t seed, const ReductionBudget& budget)
{
    Rng rng(seed);
    if (theorem == "ubp") {
        const FinitePoset base = random_index(rng, 4);
        const FinitePoset index = adjoin_below(base, "u", {rng.below(base.size())});
        return check_ubp(random_diagram(index, 5, rng), "u");
    }
    if (theorem == "maximum") {
        if (rng.chance(0.5)) {
            const FinitePoset x = random_poset(rng.between(1, 6), rng.unit(), rng, "x");
            const FinitePoset y = random_poset(rng.between(1, 6), rng.unit(), rng, "y");
            return check_maximum(cylinder_diagram(random_map(x, y, rng)));
        }
        const FinitePoset index = adjoin_top(random_index(rng, 4), "t");
        return check_maximum(random_diagram(index, 4, rng));
    }
    if (theorem == "homotopy") {
        const PosetDiagram d = random_diagram(random_index(rng, 4), 3, rng);
        const FinitePoset factor = rng.chance(0.5) ? chain_poset(rng.between(1, 3), "c")
                                                   : adjoin_top(random_poset(rng.between(1, 3), rng.unit(), rng, "c"), "t");
        return check_homotopy_lemma(product_projection(d, factor), budget);
    }
    if (theorem == "dbp")
        return random_dbp_family(rng, false, budget);
    if (theorem == "dbpgen")
        return random_dbp_family(rng, true, budget);
    if (theorem == "up-wp") {
        if (rng.chance(0.2)) {
            const FinitePoset w = w_poset();
            std::vector<std::size_t> all(w.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                all[i] = i;
            return check_up_wp(random_diagram(adjoin_below(w, "u", all), 2, rng), "u", budget);
        }
        const FinitePoset base = random_index(rng, 5);
        std::vector<std::size_t> above;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (rng.chance(0.5))
                above.push_back(i);
        if (above.empty())
            above.push_back(rng.below(base.size()));
        return check_up_wp(random_diagram(adjoin_below(base, "u", above), 4, rng), "u", budget);
    }
    if (theorem == "cofinality") {
        const PosetMap phi = random_cofinal_map(rng);
        return check_cofinality(phi, random_diagram(phi.target(), 4, rng), budget);
    }
    if (theorem == "thomason")
        return check_thomason_roundtrip(random_diagram(random_index(rng, 4), 4, rng));
    if (theorem == "barycentric")
        return check_barycentric(random_complex_diagram(random_index(rng, 3), 4, rng));
    if (theorem == "index-contractible") {
        const FinitePoset index = adjoin_top(random_index(rng, 4), "t");
        return check_index_contractible(constant_complex_diagram(index, random_complex(rng.between(1, 4), rng)),
                                        budget);
    }
    if (theorem == "gamma-index") {
        FinitePoset index;
        switch (rng.below(3)) {
        case 0: index = w_poset(); break;
        case 1: index = adjoin_top(random_index(rng, 5), "t"); break;
        default: index = random_index(rng, 6); break;
        }
        return check_gamma_index(constant_complex_diagram(index, random_complex(rng.between(1, 4), rng)), budget);
    }
    throw std::invalid_argument("unknown theorem '" + theorem + "'");
}

std::vector<CheckReport> run_random_checks(const std::string& theorem, std::size_t count, std::uint64_t seed,
                                           const ReductionBudget& budget, std::size_t jobs)
{
    if (std::find(theorem_ids().begin(), theorem_ids().end(), theorem) == theorem_ids().end())
        throw std::invalid_argument("unknown theorem '" + theorem + "'");
    std::vector<CheckReport> reports(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                reports[i] = random_check(theorem, derive_seed(seed, i), budget);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, count));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t k = 0; k < threads; ++k)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return reports;
}

std::vector<CheckReport> example_checks(const ReductionBudget& budget)
{
    std::vector<CheckReport> out;
    const FinitePoset circle = circle_poset();
    const FinitePoset point = point_poset("*");
    const FinitePoset w = w_poset();
    const FinitePoset two = chain_poset(2);

    // B_f of the circle onto a point collapses onto the point
    const PosetDiagram cylinder = cylinder_diagram(constant_map(circle, point, "*"));
    out.push_back(check_maximum(cylinder));
    out.push_back(check_ubp(cylinder, "0"));
    out.push_back(check_maximum(constant_diagram(chain_poset(3), two)));

    PosetDiagram::CoverMaps identity_cover{{{"0", "1"}, identity_map(circle)}};
    out.push_back(check_dbp(PosetDiagram(two, {{"0", circle}, {"1", circle}}, identity_cover), "1", "0"));
    PosetDiagram::CoverMaps collapse_cover{{{"0", "1"}, constant_map(circle, point, "*")}};
    out.push_back(check_dbp(PosetDiagram(two, {{"0", circle}, {"1", point}}, collapse_cover), "1", "0"));
    out.push_back(check_dbpgen(PosetDiagram(two, {{"0", circle}, {"1", point}}, collapse_cover), "1", "0", budget));

    // pushout of two weak equivalences out of the circle
    const FinitePoset span({"0", "1", "2"}, {{"0", "1"}, {"0", "2"}});
    const FinitePoset thick = product(circle, two);
    std::map<std::string, std::string> section;
    for (const auto& x : circle.elements())
        section[x] = "(" + x + ",0)";
    const PosetDiagram pushout(span, {{"0", circle}, {"1", circle}, {"2", thick}},
                               {{{"0", "1"}, identity_map(circle)},
                                {{"0", "2"}, PosetMap::from_assignment(circle, thick, section)}});
    out.push_back(check_dbpgen(pushout, "1", "0", budget));

    std::vector<std::size_t> all_w(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        all_w[i] = i;
    out.push_back(check_up_wp(constant_diagram(adjoin_below(w, "u", all_w), two), "u", budget));
    out.push_back(check_up_wp(constant_diagram(adjoin_below(circle, "u", {0, 1, 2, 3}), two), "u", budget));

    out.push_back(check_homotopy_lemma(product_projection(pushout, two), budget));
    out.push_back(check_cofinality(constant_map(w, point, "*"), constant_diagram(point, circle), budget));
    out.push_back(check_cofinality(identity_map(span), pushout, budget));

    const PosetDiagram sphere(span, {{"0", circle}, {"1", point_poset("n")}, {"2", point_poset("s")}},
                              {{{"0", "1"}, constant_map(circle, point_poset("n"), "n")},
                               {{"0", "2"}, constant_map(circle, point_poset("s"), "s")}});
    out.push_back(check_thomason_roundtrip(sphere));
    out.push_back(check_thomason_roundtrip(constant_diagram(point, point)));

    const SimplicialComplex triangle = simplex_boundary({"a", "b", "c"});
    out.push_back(check_barycentric(constant_complex_diagram(two, triangle)));
    out.push_back(check_index_contractible(constant_complex_diagram(chain_poset(3), triangle), budget));
    out.push_back(check_index_contractible(constant_complex_diagram(w, triangle), budget));
    out.push_back(check_gamma_index(constant_complex_diagram(w, triangle), budget));
    return out;
}

}  // namespace finhtop
