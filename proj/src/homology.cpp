#include "finhtop/homology.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <stdexcept>

#include "finhtop/diagram.hpp"
#include "finhtop/errors.hpp"

namespace finhtop {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<long long>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DomainMismatch("ragged dense matrix");
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] != 0)
                m.columns_[c].emplace_back(r, BigInt(rows[r][c]));
    }
    return m;
}

BigInt IntegerMatrix::at(std::size_t r, std::size_t c) const
{
    const auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
    if (it != col.end() && it->first == r)
        return it->second;
    return 0;
}

void IntegerMatrix::set(std::size_t r, std::size_t c, BigInt value)
{
    if (r >= rows_)
        throw DomainMismatch("row out of range");
    auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
        if (value.is_zero())
            col.erase(it);
        else
            it->second = std::move(value);
    } else if (!value.is_zero()) {
        col.insert(it, {r, std::move(value)});
    }
}

bool IntegerMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& rhs) const
{
    if (cols() != rhs.rows())
        throw DomainMismatch("matrix dimensions do not agree");
    IntegerMatrix out(rows_, rhs.cols());
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
        std::map<std::size_t, BigInt> acc;
        for (const auto& [k, b] : rhs.column(c))
            for (const auto& [r, a] : columns_[k])
                acc[r] += a * b;
        for (auto& [r, v] : acc)
            if (!v.is_zero())
                out.columns_[c].emplace_back(r, std::move(v));
    }
    return out;
}

namespace {

struct Overflow {};

/// 64-bit integer whose arithmetic throws Overflow instead of wrapping.
struct Checked {
    long long v = 0;
};

Checked operator-(Checked a, Checked b)
{
    long long r;
    if (__builtin_sub_overflow(a.v, b.v, &r))
        throw Overflow{};
    return {r};
}
Checked operator*(Checked a, Checked b)
{
    long long r;
    if (__builtin_mul_overflow(a.v, b.v, &r))
        throw Overflow{};
    return {r};
}

bool is_zero(const Checked& a) { return a.v == 0; }
bool is_zero(const BigInt& a) { return a.is_zero(); }
bool is_unit(const Checked& a) { return a.v == 1 || a.v == -1; }
bool is_unit(const BigInt& a) { return a == 1 || a == -1; }

template <class Int>
Int convert(const BigInt& value);

template <>
Checked convert<Checked>(const BigInt& value)
{
    if (value > LLONG_MAX || value < LLONG_MIN)
        throw Overflow{};
    return {static_cast<long long>(value)};
}

template <>
BigInt convert<BigInt>(const BigInt& value)
{
    return value;
}

BigInt to_big(const Checked& a) { return BigInt(a.v); }
BigInt to_big(const BigInt& a) { return a; }

/**
 * Sparse elimination of unit pivots.  Each unit pivot contributes an
 * invariant factor 1 and removes one row and one column; the invariant
 * factors of what is left are those of the original matrix minus those 1s.
 */
template <class Int>
class UnitEliminator {
public:
    explicit UnitEliminator(const IntegerMatrix& m)
        : rows_(m.rows()), col_rows_(m.cols()), row_alive_(m.rows(), true), col_alive_(m.cols(), true)
    {
        for (std::size_t c = 0; c < m.cols(); ++c)
            for (const auto& [r, value] : m.column(c)) {
                rows_[r].emplace_back(c, convert<Int>(value));
                col_rows_[c].insert(r);
            }
    }

    void run()
    {
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t c = 0; c < col_rows_.size(); ++c) {
                if (!col_alive_[c])
                    continue;
                if (col_rows_[c].empty()) {
                    col_alive_[c] = false;
                    continue;
                }
                std::size_t best = SIZE_MAX;
                for (std::size_t r : col_rows_[c])
                    if (is_unit(entry(r, c)) && (best == SIZE_MAX || rows_[r].size() < rows_[best].size()))
                        best = r;
                if (best == SIZE_MAX)
                    continue;
                eliminate(best, c);
                progress = true;
            }
        }
    }

    std::size_t units() const noexcept { return units_; }

    /// What is left after elimination, as a dense matrix.
    std::vector<std::vector<BigInt>> residual() const
    {
        std::vector<std::size_t> cols;
        std::map<std::size_t, std::size_t> col_pos;
        for (std::size_t c = 0; c < col_rows_.size(); ++c)
            if (col_alive_[c] && !col_rows_[c].empty()) {
                col_pos[c] = cols.size();
                cols.push_back(c);
            }
        std::vector<std::vector<BigInt>> dense;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!row_alive_[r] || rows_[r].empty())
                continue;
            std::vector<BigInt> row(cols.size());
            for (const auto& [c, value] : rows_[r])
                row[col_pos.at(c)] = to_big(value);
            dense.push_back(std::move(row));
        }
        return dense;
    }

private:
    using Row = std::vector<std::pair<std::size_t, Int>>;

    Int entry(std::size_t r, std::size_t c) const
    {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::size_t col) { return e.first < col; });
        return (it != row.end() && it->first == c) ? it->second : Int{};
    }

    void eliminate(std::size_t pr, std::size_t pc)
    {
        const Int pivot = entry(pr, pc);
        std::vector<std::size_t> targets;
        for (std::size_t r : col_rows_[pc])
            if (r != pr)
                targets.push_back(r);
        for (std::size_t t : targets) {
            // pivot is ±1, so its inverse is itself
            const Int factor = entry(t, pc) * pivot;
            subtract_multiple(t, factor, pr);
        }
        for (const auto& [c, value] : rows_[pr])
            col_rows_[c].erase(pr);
        rows_[pr].clear();
        row_alive_[pr] = false;
        col_alive_[pc] = false;
        ++units_;
    }

    /// row[t] -= factor * row[src]
    void subtract_multiple(std::size_t t, const Int& factor, std::size_t src)
    {
        const Row& a = rows_[t];
        const Row& b = rows_[src];
        Row out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, Int{} - factor * b[j].second);
                col_rows_[b[j].first].insert(t);
                ++j;
            } else {
                Int value = a[i].second - factor * b[j].second;
                if (is_zero(value))
                    col_rows_[a[i].first].erase(t);
                else
                    out.emplace_back(a[i].first, std::move(value));
                ++i;
                ++j;
            }
        }
        rows_[t] = std::move(out);
    }

    std::vector<Row> rows_;
    std::vector<std::set<std::size_t>> col_rows_;
    std::vector<bool> row_alive_;
    std::vector<bool> col_alive_;
    std::size_t units_ = 0;
};

BigInt magnitude(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

/// Dense Smith normal form with smallest-magnitude pivoting (lowest row, then column, on ties).
std::vector<BigInt> dense_invariant_factors(std::vector<std::vector<BigInt>> a)
{
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a.front().size();
    std::vector<BigInt> factors;

    auto swap_cols = [&](std::size_t x, std::size_t y) {
        if (x != y)
            for (auto& row : a)
                std::swap(row[x], row[y]);
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        std::size_t pi = m, pj = n;
        BigInt best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (!a[i][j].is_zero() && (pi == m || magnitude(a[i][j]) < best)) {
                    best = magnitude(a[i][j]);
                    pi = i;
                    pj = j;
                }
        if (pi == m)
            break;
        std::swap(a[t], a[pi]);
        swap_cols(t, pj);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t].is_zero())
                    continue;
                const BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < n; ++j)
                    a[i][j] -= q * a[t][j];
                if (!a[i][t].is_zero())
                    clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j].is_zero())
                    continue;
                const BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < m; ++i)
                    a[i][j] -= q * a[i][t];
                if (!a[t][j].is_zero())
                    clean = false;
            }
            if (!clean) {
                // a remainder smaller than the pivot survived; promote the smallest one
                std::size_t bi = t, bj = t;
                BigInt small = magnitude(a[t][t]);
                for (std::size_t i = t + 1; i < m; ++i)
                    if (!a[i][t].is_zero() && magnitude(a[i][t]) < small) {
                        small = magnitude(a[i][t]);
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!a[t][j].is_zero() && magnitude(a[t][j]) < small) {
                        small = magnitude(a[t][j]);
                        bi = t;
                        bj = j;
                    }
                std::swap(a[t], a[bi]);
                swap_cols(t, bj);
                continue;
            }
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (BigInt(a[i][j] % a[t][t]) != 0) {
                        for (std::size_t k = t; k < n; ++k)
                            a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        factors.push_back(magnitude(a[t][t]));
    }
    return factors;
}

template <class Int>
std::vector<BigInt> invariant_factors_with(const IntegerMatrix& matrix)
{
    UnitEliminator<Int> eliminator(matrix);
    eliminator.run();
    std::vector<BigInt> factors(eliminator.units(), BigInt(1));
    for (auto& d : dense_invariant_factors(eliminator.residual()))
        factors.push_back(std::move(d));
    return factors;
}

IntegerMatrix boundary_between(const std::vector<Simplex>& faces, const std::vector<Simplex>& simplices)
{
    IntegerMatrix m(faces.size(), simplices.size());
    for (std::size_t c = 0; c < simplices.size(); ++c) {
        const auto& s = simplices[c];
        std::vector<std::pair<std::size_t, BigInt>> entries;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != i)
                    face.push_back(s[k]);
            auto it = std::lower_bound(faces.begin(), faces.end(), face);
            if (it == faces.end() || *it != face)
                throw std::logic_error("simplex list is not closed under faces");
            entries.emplace_back(static_cast<std::size_t>(it - faces.begin()), BigInt(i % 2 == 0 ? 1 : -1));
        }
        std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [r, v] : entries)
            m.set(r, c, std::move(v));
    }
    return m;
}

std::vector<IntegerMatrix> boundaries_of(const std::vector<std::vector<Simplex>>& groups)
{
    std::vector<IntegerMatrix> result;
    for (std::size_t k = 1; k < groups.size(); ++k)
        result.push_back(boundary_between(groups[k - 1], groups[k]));
    for (std::size_t k = 1; k < result.size(); ++k)
        if (!result[k - 1].multiply(result[k]).is_zero())
            throw std::logic_error("boundary of a boundary is nonzero");
    return result;
}

}  // namespace

std::vector<BigInt> smith_normal_form(const IntegerMatrix& matrix)
{
    try {
        return invariant_factors_with<Checked>(matrix);
    } catch (const Overflow&) {
        return invariant_factors_with<BigInt>(matrix);
    }
}

std::vector<IntegerMatrix> boundary_matrices(const SimplicialComplex& complex)
{
    if (complex.empty())
        throw EmptyComplex();
    return boundaries_of(complex.simplices_by_dimension());
}

std::size_t HomologyProfile::reduced_betti(std::size_t k) const
{
    const std::size_t b = betti(k);
    return (k == 0 && b > 0) ? b - 1 : b;
}

bool HomologyProfile::is_acyclic() const
{
    for (std::size_t k = 0; k < degrees.size(); ++k)
        if (reduced_betti(k) != 0 || !degrees[k].torsion.empty())
            return false;
    return !degrees.empty();
}

long long HomologyProfile::euler_characteristic() const
{
    long long chi = 0;
    for (std::size_t k = 0; k < degrees.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(degrees[k].betti);
    return chi;
}

HomologyProfile homology_from_simplices(const std::vector<std::vector<Simplex>>& simplices)
{
    if (simplices.empty() || simplices.front().empty())
        throw EmptyComplex();
    const auto boundaries = boundaries_of(simplices);
    const std::size_t top = simplices.size();

    // rank[k] = rank of ∂_k, with ∂_0 = ∂_{top} = 0
    std::vector<std::size_t> rank(top + 1, 0);
    HomologyProfile profile;
    profile.degrees.resize(top);
    for (std::size_t k = 1; k < top; ++k) {
        auto factors = smith_normal_form(boundaries[k - 1]);
        rank[k] = factors.size();
        for (auto& d : factors)
            if (d > 1)
                profile.degrees[k - 1].torsion.push_back(std::move(d));
    }
    long long chi = 0;
    for (std::size_t k = 0; k < top; ++k) {
        profile.degrees[k].betti = simplices[k].size() - rank[k] - rank[k + 1];
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(simplices[k].size());
    }
    if (chi != profile.euler_characteristic())
        throw std::logic_error("Euler characteristic mismatch in homology computation");
    while (profile.degrees.size() > 1 && profile.degrees.back() == HomologyDegree{})
        profile.degrees.pop_back();
    return profile;
}

HomologyProfile homology_profile(const SimplicialComplex& complex)
{
    if (complex.empty())
        throw EmptyComplex();
    return homology_from_simplices(complex.simplices_by_dimension());
}

HomologyProfile poset_homology(const FinitePoset& poset)
{
    if (poset.empty())
        throw EmptyPoset();
    return homology_from_simplices(poset_chains(poset));
}

HomologyProfile relative_poset_homology(const FinitePoset& poset, const Bits& sub)
{
    if (sub.size() != poset.size())
        throw DomainMismatch("subset mask size does not match the poset");
    // chains not contained in the subposet; their faces inside it vanish in the quotient
    std::vector<std::vector<Simplex>> groups;
    for (auto& group : poset_chains(poset)) {
        std::vector<Simplex> kept;
        for (auto& chain : group)
            if (std::any_of(chain.begin(), chain.end(), [&](std::size_t v) { return !sub.test(v); }))
                kept.push_back(std::move(chain));
        groups.push_back(std::move(kept));
    }
    while (!groups.empty() && groups.back().empty())
        groups.pop_back();
    HomologyProfile profile;
    const std::size_t top = groups.size();
    std::vector<std::size_t> rank(top + 1, 0);
    profile.degrees.resize(top);
    for (std::size_t k = 1; k < top; ++k) {
        IntegerMatrix m(groups[k - 1].size(), groups[k].size());
        for (std::size_t c = 0; c < groups[k].size(); ++c) {
            const auto& s = groups[k][c];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i)
                        face.push_back(s[j]);
                auto it = std::lower_bound(groups[k - 1].begin(), groups[k - 1].end(), face);
                if (it != groups[k - 1].end() && *it == face)
                    m.set(static_cast<std::size_t>(it - groups[k - 1].begin()), c, BigInt(i % 2 == 0 ? 1 : -1));
            }
        }
        auto factors = smith_normal_form(m);
        rank[k] = factors.size();
        for (auto& d : factors)
            if (d > 1)
                profile.degrees[k - 1].torsion.push_back(std::move(d));
    }
    for (std::size_t k = 0; k < top; ++k)
        profile.degrees[k].betti = groups[k].size() - rank[k] - rank[k + 1];
    while (!profile.degrees.empty() && profile.degrees.back() == HomologyDegree{})
        profile.degrees.pop_back();
    return profile;
}

bool induces_homology_isomorphism(const PosetMap& f)
{
    // B_f deformation retracts onto the target, so f_* is an isomorphism iff H_*(B_f, source) = 0
    const FinitePoset cylinder = mapping_cylinder(f);
    Bits source(cylinder.size());
    for (std::size_t i = 0; i < f.source().size(); ++i)
        source.set(i);
    return relative_poset_homology(cylinder, source).degrees.empty();
}

bool profiles_equal(const HomologyProfile& a, const HomologyProfile& b)
{
    const std::size_t n = std::max(a.degrees.size(), b.degrees.size());
    for (std::size_t k = 0; k < n; ++k)
        if (a.betti(k) != b.betti(k) || a.torsion(k) != b.torsion(k))
            return false;
    return true;
}

HomologyProfile point_profile()
{
    HomologyProfile p;
    p.degrees.push_back({1, {}});
    return p;
}

std::string format_profile(const HomologyProfile& profile)
{
    std::string out;
    for (std::size_t k = 0; k < profile.degrees.size(); ++k) {
        const auto& d = profile.degrees[k];
        std::vector<std::string> terms;
        if (d.betti > 0)
            terms.push_back("Z^" + std::to_string(d.betti));
        for (const auto& t : d.torsion)
            terms.push_back("Z/" + t.str());
        out += "H_" + std::to_string(k) + " = ";
        if (terms.empty())
            out += "0";
        for (std::size_t i = 0; i < terms.size(); ++i)
            out += (i > 0 ? " ⊕ " : "") + terms[i];
        out += "\n";
    }
    return out;
}

}  // namespace finhtop
