#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "icstab/simplex.hpp"
#include "support/oracles.hpp"

using namespace icstab;

namespace {

std::vector<std::vector<BigInt>> matrix(std::vector<std::vector<long long>> rows) {
    std::vector<std::vector<BigInt>> out;
    for (auto& row : rows) out.emplace_back(row.begin(), row.end());
    return out;
}

std::vector<BigInt> vec(std::vector<long long> values) {
    return std::vector<BigInt>(values.begin(), values.end());
}

}  // namespace

TEST_CASE("hand worked instances") {
    // max l1+l2 st 2l1 <= 1, 2l2 <= 1: optimum 1 at (1/2, 1/2)
    LpResult r = solve_max_lp(matrix({{2, 0}, {0, 2}}), vec({1, 1}), vec({1, 1}));
    REQUIRE(r.bounded);
    CHECK(r.optimum == Rational(BigInt(1)));
    CHECK(r.solution[0] == Rational(BigInt(1), BigInt(2)));

    // triangle fractional matching: optimum 3/2
    LpResult t = solve_max_lp(matrix({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}), vec({1, 1, 1}),
                              vec({1, 1, 1}));
    REQUIRE(t.bounded);
    CHECK(t.optimum == Rational(BigInt(3), BigInt(2)));

    // degenerate rhs with zeros forces lambda = 0 on touching columns
    LpResult z = solve_max_lp(matrix({{1, 0}, {0, 1}}), vec({0, 5}), vec({1, 1}));
    REQUIRE(z.bounded);
    CHECK(z.optimum == Rational(BigInt(5)));

    // unbounded: a zero column
    LpResult u = solve_max_lp(matrix({{0}, {0}}), vec({1, 1}), vec({1}));
    CHECK_FALSE(u.bounded);
}

TEST_CASE("optimum matches brute-force basic solution scan") {
    std::mt19937_64 gen(424242);
    for (int iter = 0; iter < 300; ++iter) {
        std::size_t m = 1 + gen() % 3, n = 1 + gen() % 4;
        std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(n));
        std::vector<BigInt> b(m), c(n);
        bool has_zero_col[8] = {};
        for (std::size_t j = 0; j < n; ++j) {
            bool nonzero = false;
            for (std::size_t i = 0; i < m; ++i) {
                long long v = gen() % 4;
                a[i][j] = BigInt(v);
                nonzero = nonzero || v;
            }
            has_zero_col[j] = !nonzero;
        }
        bool any_zero = false;
        for (std::size_t j = 0; j < n; ++j) any_zero = any_zero || has_zero_col[j];
        if (any_zero) continue;  // would be unbounded
        for (std::size_t i = 0; i < m; ++i) b[i] = BigInt(static_cast<long long>(gen() % 7));
        for (std::size_t j = 0; j < n; ++j) c[j] = BigInt(static_cast<long long>(gen() % 5));
        LpResult r = solve_max_lp(a, b, c);
        REQUIRE(r.bounded);
        auto brute = testsupport::brute_lp_max(a, b, c);
        REQUIRE(brute.has_value());
        CHECK(r.optimum == *brute);
        // returned solution must be feasible and achieve the optimum
        Rational achieved;
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(r.solution[j].sign() >= 0);
            achieved = achieved + Rational(c[j]) * r.solution[j];
        }
        CHECK(achieved == r.optimum);
        for (std::size_t i = 0; i < m; ++i) {
            Rational row;
            for (std::size_t j = 0; j < n; ++j) row = row + Rational(a[i][j]) * r.solution[j];
            CHECK(row <= Rational(b[i]));
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(solve_max_lp(matrix({{1}}), vec({-1}), vec({1})), std::invalid_argument);
    CHECK_THROWS_AS(solve_max_lp(matrix({{1, 2}}), vec({1}), vec({1})), std::invalid_argument);
}
