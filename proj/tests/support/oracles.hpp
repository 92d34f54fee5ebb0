#pragma once

// Test-only oracles, deliberately independent of the library code paths they
// cross-check: rank computations use plain rational Gaussian elimination
// here, and Betti numbers come from Taylor-complex strands rather than
// upper-Koszul complexes.

#include <map>
#include <optional>
#include <vector>

#include "icstab/bigint.hpp"
#include "icstab/monomial.hpp"

namespace icstab::testsupport {

inline long long rational_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            Rational f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

// Multigraded Betti numbers of the ideal from Taylor-complex strands: the
// strand at multidegree alpha is spanned by generator subsets with lcm equal
// to alpha, and beta_{i,alpha}(I) is its homology at subset size i+1.
inline std::map<std::pair<int, std::vector<long long>>, long long> taylor_betti(
    const MonomialIdeal& ideal) {
    const auto& gens = ideal.gens();
    const std::size_t g = gens.size();
    if (g > 20) throw std::invalid_argument("taylor_betti: too many generators");
    const int r = ideal.ambient();
    std::vector<std::vector<long long>> lcms(std::size_t{1} << g);
    lcms[0].assign(r, 0);
    for (std::size_t mask = 1; mask < lcms.size(); ++mask) {
        std::size_t low = mask & ~(mask - 1);
        std::size_t lowbit = 0;
        while (!(low >> lowbit & 1)) ++lowbit;
        lcms[mask] = lcms[mask & (mask - 1)];
        for (int i = 0; i < r; ++i) {
            long long e = gens[lowbit][i].to_int64();
            if (e > lcms[mask][i]) lcms[mask][i] = e;
        }
    }
    std::map<std::vector<long long>, std::vector<std::vector<std::size_t>>> strands;
    for (std::size_t mask = 1; mask < lcms.size(); ++mask) {
        auto& by_card = strands[lcms[mask]];
        std::size_t card = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (by_card.size() <= card) by_card.resize(card + 1);
        by_card[card].push_back(mask);
    }
    std::map<std::pair<int, std::vector<long long>>, long long> betti;
    for (auto& [alpha, by_card] : strands) {
        std::vector<long long> boundary_rank(by_card.size() + 1, 0);
        for (std::size_t c = 2; c < by_card.size(); ++c) {
            const auto& cols = by_card[c];
            const auto& rows = by_card[c - 1];
            if (cols.empty() || rows.empty()) continue;
            std::map<std::size_t, std::size_t> row_index;
            for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
            std::vector<std::vector<Rational>> m(rows.size(),
                                                 std::vector<Rational>(cols.size()));
            for (std::size_t j = 0; j < cols.size(); ++j) {
                int sign = 1;
                for (std::size_t bits = cols[j]; bits; bits &= bits - 1) {
                    std::size_t sub = cols[j] & ~(bits & ~(bits - 1));
                    auto it = row_index.find(sub);
                    if (it != row_index.end()) m[it->second][j] = Rational(BigInt(sign));
                    sign = -sign;
                }
            }
            boundary_rank[c] = rational_rank(std::move(m));
        }
        for (std::size_t c = 1; c < by_card.size(); ++c) {
            long long h = static_cast<long long>(by_card[c].size()) - boundary_rank[c] -
                          (c + 1 < boundary_rank.size() ? boundary_rank[c + 1] : 0);
            if (h != 0) betti[{static_cast<int>(c) - 1, alpha}] = h;
        }
    }
    return betti;
}

// max homological index with a nonzero Betti number of the ideal, via Taylor
inline long long taylor_pd(const MonomialIdeal& ideal) {
    long long pd = -1;
    for (const auto& [key, rank] : taylor_betti(ideal)) pd = std::max(pd, (long long)key.first);
    return pd;
}

// brute-force LP oracle: scan all basic solutions of [A | I] x = b
inline std::optional<Rational> brute_lp_max(const std::vector<std::vector<BigInt>>& a,
                                            const std::vector<BigInt>& b,
                                            const std::vector<BigInt>& c) {
    const std::size_t m = a.size(), n = c.size(), total = n + m;
    std::optional<Rational> best;
    std::vector<std::size_t> cols;
    auto consider = [&]() {
        std::vector<std::vector<Rational>> sys(m, std::vector<Rational>(m + 1));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t k = 0; k < m; ++k) {
                std::size_t col = cols[k];
                sys[i][k] = col < n ? Rational(a[i][col])
                                    : Rational(BigInt(col - n == i ? 1 : 0));
            }
            sys[i][m] = Rational(b[i]);
        }
        // solve by elimination; singular systems are skipped
        std::vector<Rational> x(m);
        for (std::size_t col = 0, row = 0; col < m; ++col, ++row) {
            std::size_t pivot = row;
            while (pivot < m && sys[pivot][col].is_zero()) ++pivot;
            if (pivot == m) return;
            std::swap(sys[row], sys[pivot]);
            for (std::size_t i = 0; i < m; ++i) {
                if (i == row || sys[i][col].is_zero()) continue;
                Rational f = sys[i][col] / sys[row][col];
                for (std::size_t j = col; j <= m; ++j) sys[i][j] = sys[i][j] - f * sys[row][j];
            }
        }
        for (std::size_t k = 0; k < m; ++k) {
            x[k] = sys[k][m] / sys[k][k];
            if (x[k].sign() < 0) return;
        }
        Rational value;
        for (std::size_t k = 0; k < m; ++k)
            if (cols[k] < n) value = value + Rational(c[cols[k]]) * x[k];
        if (!best || value > *best) best = value;
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (cols.size() == m) {
            consider();
            return;
        }
        for (std::size_t i = from; i < total; ++i) {
            cols.push_back(i);
            self(self, i + 1);
            cols.pop_back();
        }
    };
    if (m == 0) return Rational();
    rec(rec, 0);
    return best;
}

}  // namespace icstab::testsupport
