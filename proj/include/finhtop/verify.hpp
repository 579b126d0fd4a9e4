#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finhtop/diagram.hpp"
#include "finhtop/homology.hpp"
#include "finhtop/poset.hpp"
#include "finhtop/reduction.hpp"
#include "finhtop/simplicial.hpp"

namespace finhtop {

enum class HypothesisStatus { Established, NotEstablished, OracleUnknown };
enum class ConclusionStatus { Verified, Refuted, Skipped };

/**
 * What a hypothesis or conclusion rests on.  Structural: a direct
 * combinatorial check.  Certified: oracle reductions.  Constructive: a
 * replayed removal sequence.  Homology: equality of homology profiles only,
 * which is a necessary condition for the homotopical statement.
 */
enum class Evidence { Structural, Certified, Constructive, Homology };

std::string to_string(HypothesisStatus status);
std::string to_string(ConclusionStatus status);
std::string to_string(Evidence evidence);

struct CheckReport {
    std::string theorem;
    HypothesisStatus hypothesis = HypothesisStatus::Established;
    std::string hypothesis_reason;
    Evidence hypothesis_evidence = Evidence::Structural;
    ConclusionStatus conclusion = ConclusionStatus::Skipped;
    Evidence conclusion_evidence = Evidence::Homology;
    std::vector<std::pair<std::string, RemovalSequence>> sequences;
    std::vector<std::pair<std::string, HomologyProfile>> profiles;
    std::vector<std::string> notes;
    /// JSON text of the inputs, present on Refuted reports.
    std::optional<std::string> counterexample;
    /// Wall time; not part of the serialized report.
    double seconds = 0.0;

    bool necessary_condition() const
    {
        return hypothesis_evidence == Evidence::Homology || conclusion_evidence == Evidence::Homology;
    }
    const RemovalSequence* sequence(const std::string& name) const;
    const HomologyProfile* profile(const std::string& name) const;
};

/// Theorem identifiers accepted by run_check and the CLI, in suite order.
const std::vector<std::string>& theorem_ids();

CheckReport check_ubp(const PosetDiagram& diagram, const std::string& p);
CheckReport check_maximum(const PosetDiagram& diagram);
CheckReport check_homotopy_lemma(const DiagramMorphism& alpha, const ReductionBudget& budget = {});
CheckReport check_dbp(const PosetDiagram& diagram, const std::string& p, const std::string& q);
CheckReport check_dbpgen(const PosetDiagram& diagram, const std::string& p, const std::string& q,
                         const ReductionBudget& budget = {});
CheckReport check_up_wp(const PosetDiagram& diagram, const std::string& p, const ReductionBudget& budget = {});
CheckReport check_cofinality(const PosetMap& phi, const PosetDiagram& diagram, const ReductionBudget& budget = {});
CheckReport check_thomason_roundtrip(const PosetDiagram& diagram);
CheckReport check_barycentric(const ComplexDiagram& diagram);
CheckReport check_index_contractible(const ComplexDiagram& diagram, const ReductionBudget& budget = {});
CheckReport check_gamma_index(const ComplexDiagram& diagram, const ReductionBudget& budget = {});

/// The poset of the cofinality argument: Q ⨿ P with q <= p iff q <= φ(p); ids "Q/q", "P/p".
FinitePoset cofinality_poset(const PosetMap& phi);
/// The diagram over cofinality_poset(phi) restricting to X on Q and to φ*X on P.
PosetDiagram cofinality_diagram(const PosetMap& phi, const PosetDiagram& diagram);

/// Fiberwise product with a fixed poset; transitions act on the first factor.
PosetDiagram product_diagram(const PosetDiagram& diagram, const FinitePoset& factor);
/// Projection of product_diagram(diagram, factor) onto diagram.
DiagramMorphism product_projection(const PosetDiagram& diagram, const FinitePoset& factor);

/// The 11-point collapsible, non-contractible poset with 1..4 minimal and 9..11 maximal.
FinitePoset w_poset();
/// Four points a, b < c, d: a model of the circle.
FinitePoset circle_poset();

/// A seeded instance of `theorem` drawn from its generator family.
CheckReport random_check(const std::string& theorem, std::uint64_t seed, const ReductionBudget& budget = {});

/// `count` seeded instances, seeds derived from `seed`; output ordered by instance regardless of `jobs`.
std::vector<CheckReport> run_random_checks(const std::string& theorem, std::size_t count, std::uint64_t seed,
                                           const ReductionBudget& budget = {}, std::size_t jobs = 1);

/// Fixed instances taken from the worked examples of the theory.
std::vector<CheckReport> example_checks(const ReductionBudget& budget = {});

}  // namespace finhtop
