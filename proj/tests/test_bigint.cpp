#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "icstab/bigint.hpp"

using icstab::BigInt;
using icstab::Rational;

TEST_CASE("small value round trips") {
    for (long long v : {0LL, 1LL, -1LL, 42LL, -9999LL, (1LL << 40), -(1LL << 52)}) {
        BigInt b(v);
        CHECK(b.fits_int64());
        CHECK(b.to_int64() == v);
        CHECK(BigInt::from_string(b.str()) == b);
    }
    CHECK(BigInt(0).str() == "0");
    CHECK(BigInt(-7).str() == "-7");
}

TEST_CASE("arithmetic agrees with __int128 on random values") {
    std::mt19937_64 gen(20240517);
    for (int iter = 0; iter < 4000; ++iter) {
        long long a = static_cast<long long>(gen() % (1ULL << 40)) - (1LL << 39);
        long long b = static_cast<long long>(gen() % (1ULL << 40)) - (1LL << 39);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        __int128 prod = static_cast<__int128>(a) * b;
        BigInt p = BigInt(a) * BigInt(b);
        __int128 q = prod < 0 ? -prod : prod;
        std::string expect = prod == 0 ? "0" : "";
        while (q) {
            expect.insert(expect.begin(), static_cast<char>('0' + static_cast<int>(q % 10)));
            q /= 10;
        }
        if (prod < 0) expect.insert(expect.begin(), '-');
        if (prod == 0) expect = "0";
        CHECK(p.str() == expect);
        if (b != 0) {
            CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
            CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
        }
    }
}

TEST_CASE("multi limb division invariant") {
    std::mt19937_64 gen(77);
    for (int iter = 0; iter < 2000; ++iter) {
        BigInt a(1), b(1);
        int la = 1 + gen() % 4, lb = 1 + gen() % 3;
        for (int i = 0; i < la; ++i) a = a * BigInt(static_cast<long long>(gen() >> 20)) + BigInt(static_cast<long long>(gen() % 1000));
        for (int i = 0; i < lb; ++i) b = b * BigInt(static_cast<long long>(gen() >> 30)) + BigInt(static_cast<long long>(gen() % 1000));
        if (gen() % 2) a = -a;
        if (b.is_zero()) b = BigInt(3);
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(BigInt::abs(r) < BigInt::abs(b));
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
        CHECK(BigInt::divexact(q * b, b) == q);
    }
}

TEST_CASE("division stress on boundary limb patterns") {
    // patterns picked to exercise the trial-quotient correction paths
    std::vector<long long> limbs = {0, 1, 0x7fffffffLL, 0x80000000LL, 0xffffffffLL};
    BigInt base = BigInt(1LL << 32);
    std::vector<BigInt> values;
    for (long long hi : limbs)
        for (long long mid : limbs)
            for (long long lo : limbs)
                values.push_back((BigInt(hi) * base + BigInt(mid)) * base + BigInt(lo));
    std::vector<BigInt> divisors;
    for (long long hi : limbs)
        for (long long lo : limbs) {
            BigInt d = BigInt(hi) * base + BigInt(lo);
            if (!d.is_zero()) divisors.push_back(d);
        }
    for (const BigInt& a : values) {
        for (const BigInt& b : divisors) {
            BigInt q, r;
            BigInt::divmod(a, b, q, r);
            CHECK(q * b + r == a);
            CHECK(BigInt::abs(r) < BigInt::abs(b));
        }
    }
}

TEST_CASE("gcd and rational normalization") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::gcd(BigInt(-8), BigInt(12)) == BigInt(4));
    Rational half(BigInt(2), BigInt(4));
    CHECK(half.num() == BigInt(1));
    CHECK(half.den() == BigInt(2));
    Rational neg(BigInt(3), BigInt(-6));
    CHECK(neg.num() == BigInt(-1));
    CHECK(neg.den() == BigInt(2));
    CHECK((half + neg).is_zero());
    CHECK(Rational(BigInt(3), BigInt(2)) > Rational(BigInt(1)));
    CHECK((Rational(BigInt(1), BigInt(3)) * Rational(BigInt(3))).str() == "1");
    CHECK(Rational(BigInt(7), BigInt(2)).str() == "7/2");
}

TEST_CASE("string parsing rejects garbage") {
    CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("12a"), std::invalid_argument);
    CHECK(BigInt::from_string("-0").is_zero());
    CHECK(BigInt::from_string("18446744073709551616").str() == "18446744073709551616");
}
