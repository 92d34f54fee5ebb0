#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "icstab/bigint.hpp"
#include "icstab/graph.hpp"

namespace icstab {

// Monomial in r variables, stored as its exponent vector. The all-zero
// vector is the unit monomial.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<BigInt> exponents);
    static Monomial unit(int r);
    static Monomial of(std::vector<long long> exponents);
    static Monomial variable(int r, int index, BigInt exp = BigInt(1));

    int vars() const { return static_cast<int>(e_.size()); }
    const std::vector<BigInt>& exponents() const { return e_; }
    const BigInt& operator[](int i) const { return e_[i]; }
    const BigInt& degree() const { return deg_; }
    bool is_unit() const { return deg_.is_zero(); }
    bool is_squarefree() const;
    int support_size() const;

    bool divides(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // coordinatewise truncated subtraction: this / d in the colon sense
    Monomial quotient_by(const Monomial& d) const;

    // graded order: degree first, then exponent vector lexicographically
    int compare(const Monomial& other) const;
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.compare(b) < 0; }

    std::string str() const;  // "x1^2*x3" style; "1" for the unit

private:
    std::vector<BigInt> e_;
    BigInt deg_;
};

// Subset of variable indices (1-based, sorted), standing for the monomial
// prime (x_i : i in support).
struct PrimeSupport {
    std::vector<int> support;

    friend bool operator==(const PrimeSupport& a, const PrimeSupport& b) {
        return a.support == b.support;
    }
    friend bool operator<(const PrimeSupport& a, const PrimeSupport& b) {
        return a.support < b.support;
    }
    std::string str() const;
};

// Monomial ideal given by its unique minimal generating antichain, kept in
// graded-lex order. The zero ideal has no generators; the unit ideal is
// generated by the unit monomial.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    int ambient() const { return ambient_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    bool is_proper() const { return !is_unit(); }
    bool is_squarefree() const;

    friend MonomialIdeal make_ideal(int r, std::vector<Monomial> gens);

private:
    int ambient_ = 0;
    std::vector<Monomial> gens_;
};

MonomialIdeal make_ideal(int r, std::vector<Monomial> gens);
MonomialIdeal zero_ideal(int r);
MonomialIdeal unit_ideal(int r);

MonomialIdeal edge_ideal(const Graph& g);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& f);
MonomialIdeal colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b);
bool contains(const MonomialIdeal& a, const Monomial& f);
bool contains_ideal(const MonomialIdeal& outer, const MonomialIdeal& inner);
MonomialIdeal localize(const MonomialIdeal& a, const std::vector<int>& inverted_vars);
MonomialIdeal saturate(const MonomialIdeal& a, const PrimeSupport& p);
MonomialIdeal symbolic_power(const MonomialIdeal& squarefree, int n);
bool equal(const MonomialIdeal& a, const MonomialIdeal& b);

// Minimal primes of a squarefree monomial ideal: complements of the maximal
// independent sets of the support hypergraph, found by exhaustive search.
std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& squarefree);

// (x_i : i in p)^n as an ideal of K[x_1..x_r].
MonomialIdeal prime_power_ideal(const PrimeSupport& p, int n, int r);

// Reinterprets a in a larger ring: variable i of a becomes variable
// i + offset among new_r variables.
MonomialIdeal extend_ambient(const MonomialIdeal& a, int new_r, int offset);

}  // namespace icstab
