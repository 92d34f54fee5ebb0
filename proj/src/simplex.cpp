#include "icstab/simplex.hpp"

#include <stdexcept>

namespace icstab {

LpResult solve_max_lp(const std::vector<std::vector<BigInt>>& A, const std::vector<BigInt>& b,
                      const std::vector<BigInt>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw std::invalid_argument("solve_max_lp: b size mismatch");
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("solve_max_lp: A row size mismatch");
    for (const auto& bi : b)
        if (bi.is_neg()) throw std::invalid_argument("solve_max_lp: requires b >= 0");

    const std::size_t rhs = n + m;
    // rows 0..m-1: constraints with slack identity; row m: objective (z - c.x)
    std::vector<std::vector<BigInt>> t(m + 1, std::vector<BigInt>(n + m + 1, BigInt(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = A[i][j];
        t[i][n + i] = BigInt(1);
        t[i][rhs] = b[i];
    }
    for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];
    BigInt den(1);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        // Bland: entering = lowest-index column with a negative reduced cost
        std::size_t q = n + m;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (t[m][j].is_neg()) {
                q = j;
                break;
            }
        }
        if (q == n + m) break;  // optimal

        // leaving row: minimum ratio rhs/col, ties by smallest basis index
        std::size_t p = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][q].sign() <= 0) continue;
            if (p == m) {
                p = i;
                continue;
            }
            int cmp = (t[i][rhs] * t[p][q]).compare(t[p][rhs] * t[i][q]);
            if (cmp < 0 || (cmp == 0 && basis[i] < basis[p])) p = i;
        }
        if (p == m) return LpResult{false, Rational(), {}};  // unbounded

        BigInt pivot = t[p][q];
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == p) continue;
            const BigInt factor = t[i][q];
            for (std::size_t j = 0; j <= rhs; ++j)
                t[i][j] = BigInt::divexact(pivot * t[i][j] - factor * t[p][j], den);
        }
        den = std::move(pivot);
        basis[p] = q;
    }

    LpResult result;
    result.bounded = true;
    result.optimum = Rational(t[m][rhs], den);
    result.solution.assign(n, Rational());
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) result.solution[basis[i]] = Rational(t[i][rhs], den);
    return result;
}

}  // namespace icstab
