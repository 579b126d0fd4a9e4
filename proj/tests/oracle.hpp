#pragma once

// Brute-force reference computations used to cross-check the library.  They
// deliberately share no algorithms with it: homology ranks come from dense
// elimination over prime fields, contractibility from a naive beat-point scan
// on a boolean matrix, and the Grothendieck order straight from its
// definition on pairs.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "finhtop/diagram.hpp"
#include "finhtop/poset.hpp"
#include "finhtop/simplicial.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix order_matrix(const finhtop::FinitePoset& p)
{
    Matrix m(p.size(), std::vector<bool>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            m[i][j] = p.leq(i, j);
    return m;
}

/// All chains of a poset, grouped by dimension, each sorted bottom to top.
inline std::vector<std::vector<std::vector<std::size_t>>> chains(const Matrix& leq)
{
    const std::size_t n = leq.size();
    std::vector<std::vector<std::vector<std::size_t>>> out;
    std::vector<std::size_t> current;
    auto extend = [&](auto&& self) -> void {
        if (!current.empty()) {
            if (out.size() < current.size())
                out.resize(current.size());
            out[current.size() - 1].push_back(current);
        }
        for (std::size_t x = 0; x < n; ++x)
            if (current.empty() || (x != current.back() && leq[current.back()][x])) {
                current.push_back(x);
                self(self);
                current.pop_back();
            }
    };
    extend(extend);
    for (auto& level : out)
        std::sort(level.begin(), level.end());
    return out;
}

/// All simplices of a complex given by facets, grouped by dimension.
inline std::vector<std::vector<std::vector<std::size_t>>> faces(const std::vector<std::vector<std::size_t>>& facets)
{
    std::vector<std::vector<std::vector<std::size_t>>> out;
    for (const auto& f : facets) {
        const std::size_t k = f.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1)
                    s.push_back(f[i]);
            std::sort(s.begin(), s.end());
            if (out.size() < s.size())
                out.resize(s.size());
            out[s.size() - 1].push_back(s);
        }
    }
    for (auto& level : out) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    return out;
}

inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> a, std::int64_t prime)
{
    auto power = [&](std::int64_t b, std::int64_t e) {
        std::int64_t r = 1;
        b %= prime;
        for (; e > 0; e >>= 1, b = b * b % prime)
            if (e & 1)
                r = r * b % prime;
        return r;
    };
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows == 0 ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] % prime == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[rank]);
        const std::int64_t inv = power((a[rank][c] % prime + prime) % prime, prime - 2);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] % prime == 0)
                continue;
            const std::int64_t factor = (a[r][c] % prime + prime) % prime * inv % prime;
            for (std::size_t k = c; k < cols; ++k)
                a[r][k] = ((a[r][k] - factor * a[rank][k]) % prime + prime) % prime;
        }
        ++rank;
    }
    return rank;
}

/// Betti numbers over the field with `prime` elements.
inline std::vector<std::size_t> betti_mod(const std::vector<std::vector<std::vector<std::size_t>>>& simplices,
                                          std::int64_t prime)
{
    const std::size_t top = simplices.size();
    std::vector<std::size_t> ranks(top + 1, 0);  // ranks[k] = rank of d_k : C_k -> C_{k-1}
    for (std::size_t k = 1; k < top; ++k) {
        const auto& rows = simplices[k - 1];
        const auto& cols = simplices[k];
        std::vector<std::vector<std::int64_t>> m(rows.size(), std::vector<std::int64_t>(cols.size(), 0));
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (std::size_t drop = 0; drop < cols[c].size(); ++drop) {
                auto face = cols[c];
                face.erase(face.begin() + static_cast<long>(drop));
                const auto r = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), face) - rows.begin());
                m[r][c] = drop % 2 == 0 ? 1 : prime - 1;
            }
        ranks[k] = rank_mod(std::move(m), prime);
    }
    std::vector<std::size_t> betti(top, 0);
    for (std::size_t k = 0; k < top; ++k)
        betti[k] = simplices[k].size() - ranks[k] - ranks[k + 1];
    while (!betti.empty() && betti.back() == 0)
        betti.pop_back();
    return betti;
}

inline constexpr std::int64_t kLargePrime = 1000003;

inline std::vector<std::size_t> rational_betti(const finhtop::FinitePoset& p)
{
    return betti_mod(chains(order_matrix(p)), kLargePrime);
}

inline std::vector<std::size_t> rational_betti(const finhtop::SimplicialComplex& k)
{
    return betti_mod(faces(k.facets()), kLargePrime);
}

/// Naive dismantlability: delete any element whose strict up-set has a
/// minimum or whose strict down-set has a maximum, until one is left.
inline bool dismantlable(const finhtop::FinitePoset& p)
{
    const Matrix leq = order_matrix(p);
    std::vector<bool> alive(p.size(), true);
    std::size_t left = p.size();
    if (left == 0)
        return false;
    bool progress = true;
    while (left > 1 && progress) {
        progress = false;
        for (std::size_t x = 0; x < p.size() && !progress; ++x) {
            if (!alive[x])
                continue;
            for (int side = 0; side < 2 && !progress; ++side) {
                std::vector<std::size_t> strict;
                for (std::size_t y = 0; y < p.size(); ++y)
                    if (alive[y] && y != x && (side == 0 ? leq[x][y] : leq[y][x]))
                        strict.push_back(y);
                for (std::size_t c : strict) {
                    bool extreme = true;
                    for (std::size_t y : strict)
                        extreme = extreme && (side == 0 ? leq[c][y] : leq[y][c]);
                    if (extreme) {
                        alive[x] = false;
                        --left;
                        progress = true;
                        break;
                    }
                }
            }
        }
    }
    return left == 1;
}

/// The Grothendieck order on pairs (p, x), straight from the definition.
inline bool hocolim_leq(const finhtop::PosetDiagram& d, std::size_t p, std::size_t x, std::size_t q, std::size_t y)
{
    if (!d.index().leq(p, q))
        return false;
    return d.fiber(q).leq(d.transition(p, q)(x), y);
}

/// Euler characteristic of the order complex as an alternating chain count.
inline long long chain_euler(const finhtop::FinitePoset& p)
{
    const auto c = chains(order_matrix(p));
    long long chi = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(c[k].size());
    return chi;
}

}  // namespace oracle
