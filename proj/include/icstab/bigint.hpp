#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace icstab {

// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
// Values at play in this project are small (a few limbs), so the
// implementation favors simplicity and predictable exactness over
// asymptotics: schoolbook multiplication and Knuth division.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sgn_ = v < 0 ? -1 : 1;
        unsigned long long u = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (u) {
            mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
            u >>= 32;
        }
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<long long>(v)) {}
    BigInt(std::size_t v) : BigInt(static_cast<long long>(v)) {
        if (v > static_cast<std::size_t>(INT64_MAX))
            throw std::overflow_error("BigInt: size_t too large");
    }

    static BigInt from_string(const std::string& s) {
        BigInt out;
        std::size_t i = 0;
        int sgn = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sgn = -1;
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("BigInt: bad digit in numeral");
            out.mul_small(10);
            out.add_small(static_cast<uint32_t>(s[i] - '0'));
        }
        if (!out.mag_.empty()) out.sgn_ = sgn;
        return out;
    }

    int sign() const { return sgn_; }
    bool is_zero() const { return sgn_ == 0; }
    bool is_neg() const { return sgn_ < 0; }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long u = mag_u64();
        if (sgn_ >= 0) return u <= static_cast<unsigned long long>(INT64_MAX);
        return u <= static_cast<unsigned long long>(INT64_MAX) + 1ULL;
    }

    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
        unsigned long long u = mag_u64();
        if (sgn_ >= 0) return static_cast<long long>(u);
        return -static_cast<long long>(u - 1) - 1;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::vector<uint32_t> tmp = mag_;
        std::string digits;
        while (!tmp.empty()) {
            // divide magnitude by 10^9, emit remainder
            uint64_t rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
            for (int k = 0; k < 9; ++k) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sgn_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    int compare(const BigInt& o) const {
        if (sgn_ != o.sgn_) return sgn_ < o.sgn_ ? -1 : 1;
        int c = cmp_mag(mag_, o.mag_);
        return sgn_ >= 0 ? c : -c;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

    BigInt operator-() const {
        BigInt r = *this;
        r.sgn_ = -r.sgn_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        BigInt r;
        if (a.sgn_ == b.sgn_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sgn_ = a.sgn_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sgn_ = a.sgn_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sgn_ = b.sgn_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.is_zero() || b.is_zero()) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a.mag_[i];
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                uint64_t cur = static_cast<uint64_t>(r.mag_[i + j]) + ai * b.mag_[j] + carry;
                r.mag_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
            }
            std::size_t k = i + b.mag_.size();
            while (carry) {
                uint64_t cur = static_cast<uint64_t>(r.mag_[k]) + carry;
                r.mag_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
                carry = cur >> 32;
                ++k;
            }
        }
        r.trim();
        r.sgn_ = a.sgn_ * b.sgn_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division (quotient rounds toward zero, C semantics).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.trim();
        r.trim();
        q.sgn_ = q.mag_.empty() ? 0 : a.sgn_ * b.sgn_;
        r.sgn_ = r.mag_.empty() ? 0 : a.sgn_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    // Exact division: throws if the remainder is nonzero.
    static BigInt divexact(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        if (!r.is_zero()) throw std::logic_error("BigInt: inexact division");
        return q;
    }

    static BigInt abs(BigInt a) {
        if (a.sgn_ < 0) a.sgn_ = 1;
        return a;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = abs(std::move(a));
        b = abs(std::move(b));
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(sgn_ + 1);
        for (uint32_t limb : mag_) h = h * 1000003u + limb;
        return h;
    }

private:
    int sgn_ = 0;
    std::vector<uint32_t> mag_;  // little-endian, no leading (high) zero limbs

    unsigned long long mag_u64() const {
        unsigned long long u = 0;
        if (mag_.size() > 0) u = mag_[0];
        if (mag_.size() > 1) u |= static_cast<unsigned long long>(mag_[1]) << 32;
        return u;
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sgn_ = 0;
    }

    void mul_small(uint32_t f) {
        uint64_t carry = 0;
        for (auto& limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * f + carry;
            limb = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }

    void add_small(uint32_t v) {
        uint64_t carry = v;
        for (std::size_t i = 0; carry && i < mag_.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(mag_[i]) + carry;
            mag_[i] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        const auto &big = a.size() >= b.size() ? a : b;
        const auto &small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r = big;
        uint64_t carry = 0;
        for (std::size_t i = 0; i < small.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + small[i] + carry;
            r[i] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        for (std::size_t i = small.size(); carry && i < r.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(r[i]) + carry;
            r[i] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // requires a >= b
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (std::size_t i = 0; i < b.size() || borrow; ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            borrow = cur < 0;
            if (cur < 0) cur += (1LL << 32);
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on magnitudes; requires |a| >= |b|, b nonzero.
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        if (b.size() == 1) {
            uint64_t d = b[0], rem = 0;
            q.assign(a.size(), 0);
            for (std::size_t i = a.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            r.clear();
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }
        // normalize so the divisor's top limb has its high bit set
        int shift = 0;
        for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        std::vector<uint32_t> u = shl_mag(a, shift);
        std::vector<uint32_t> v = shl_mag(b, shift);
        std::size_t n = v.size(), m = u.size() - n;
        u.push_back(0);
        q.assign(m + 1, 0);
        const uint64_t base = 1ULL << 32;
        for (std::size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // multiply-subtract qhat*v from u[j..j+n]
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
                borrow = t < 0;
                if (t < 0) t += static_cast<int64_t>(base);
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large; add divisor back
                t += static_cast<int64_t>(base);
                --qhat;
                uint64_t c = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c;
                    u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
                    c = s >> 32;
                }
                t += static_cast<int64_t>(c);
                t &= static_cast<int64_t>(base) - 1;
            }
            u[j + n] = static_cast<uint32_t>(t);
            q[j] = static_cast<uint32_t>(qhat);
        }
        u.resize(n);
        r = shr_mag(u, shift);
    }

    static std::vector<uint32_t> shl_mag(const std::vector<uint32_t>& a, int s) {
        if (s == 0) return a;
        std::vector<uint32_t> r(a.size() + 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            r[i] |= a[i] << s;
            r[i + 1] |= static_cast<uint32_t>(static_cast<uint64_t>(a[i]) >> (32 - s));
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> shr_mag(const std::vector<uint32_t>& a, int s) {
        std::vector<uint32_t> r = a;
        if (s) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                r[i] >>= s;
                if (i + 1 < r.size())
                    r[i] |= static_cast<uint32_t>(static_cast<uint64_t>(r[i + 1]) << (32 - s));
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

// Exact rational number; denominator kept positive, fraction always reduced.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    int compare(const Rational& o) const { return (num_ * o.den_).compare(o.num_ * den_); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.compare(b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.compare(b) >= 0; }

    std::string str() const {
        if (den_ == BigInt(1)) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.is_neg()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (g != BigInt(1)) {
            num_ = BigInt::divexact(num_, g);
            den_ = BigInt::divexact(den_, g);
        }
    }
};

}  // namespace icstab
