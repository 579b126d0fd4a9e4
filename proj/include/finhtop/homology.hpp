#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "finhtop/poset.hpp"
#include "finhtop/simplicial.hpp"

namespace finhtop {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix, column-major; entries are unbounded integers.
class IntegerMatrix {
public:
    using Column = std::vector<std::pair<std::size_t, BigInt>>;

    IntegerMatrix(std::size_t rows, std::size_t cols);
    static IntegerMatrix from_dense(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }

    BigInt at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, BigInt value);

    /// Column c as (row, value) pairs, sorted by row, zeros omitted.
    const Column& column(std::size_t c) const { return columns_.at(c); }

    bool is_zero() const;
    /// this * rhs
    IntegerMatrix multiply(const IntegerMatrix& rhs) const;

private:
    std::size_t rows_;
    std::vector<Column> columns_;
};

/// Invariant factors d1 | d2 | ... | dr of M (all positive; r = rank).
std::vector<BigInt> smith_normal_form(const IntegerMatrix& matrix);

/// Betti number and torsion coefficients (invariant factors > 1) in one degree.
struct HomologyDegree {
    std::size_t betti = 0;
    std::vector<BigInt> torsion;

    bool operator==(const HomologyDegree& o) const { return betti == o.betti && torsion == o.torsion; }
    bool operator!=(const HomologyDegree& o) const { return !(*this == o); }
};

/**
 * Integral homology of a finite complex, degrees 0..d.  Trailing degrees with
 * no homology are dropped (degree 0 is always present for a nonempty space),
 * so two profiles of weakly equivalent spaces compare equal with `==`.
 */
struct HomologyProfile {
    std::vector<HomologyDegree> degrees;

    std::size_t betti(std::size_t k) const { return k < degrees.size() ? degrees[k].betti : 0; }
    std::vector<BigInt> torsion(std::size_t k) const
    {
        return k < degrees.size() ? degrees[k].torsion : std::vector<BigInt>{};
    }
    /// Betti numbers of reduced homology: b0 - 1 in degree 0.
    std::size_t reduced_betti(std::size_t k) const;
    /// True iff reduced homology vanishes (including torsion).
    bool is_acyclic() const;
    long long euler_characteristic() const;

    bool operator==(const HomologyProfile& o) const { return degrees == o.degrees; }
    bool operator!=(const HomologyProfile& o) const { return !(*this == o); }
};

/// ∂_1 .. ∂_d; entry (face, simplex) is (-1)^i when the face drops the i-th vertex.
std::vector<IntegerMatrix> boundary_matrices(const SimplicialComplex& complex);

HomologyProfile homology_profile(const SimplicialComplex& complex);

/// Homology of K(P), computed from the chains of P directly.
HomologyProfile poset_homology(const FinitePoset& poset);

/// Homology from an explicit simplex list grouped by dimension (each group sorted).
HomologyProfile homology_from_simplices(const std::vector<std::vector<Simplex>>& simplices);

/**
 * Homology of the pair (K(P), K(S)) for the subposet S selected by `sub`.
 * Empty `degrees` means the relative homology vanishes.
 */
HomologyProfile relative_poset_homology(const FinitePoset& poset, const Bits& sub);

/// f induces isomorphisms on integral homology in every degree.
bool induces_homology_isomorphism(const PosetMap& f);

bool profiles_equal(const HomologyProfile& a, const HomologyProfile& b);

/// The profile of a point.
HomologyProfile point_profile();

/// One line per degree, "H_k = Z^b ⊕ Z/d1 ⊕ ..." ("0" for the trivial group).
std::string format_profile(const HomologyProfile& profile);

}  // namespace finhtop
