#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icstab/monomial.hpp"

namespace icstab {

// (x_i^{a_i} : i in dom) for a partial exponent map with positive entries.
struct IrreducibleComponent {
    std::vector<std::pair<int, BigInt>> bounds;  // sorted by 1-based variable

    PrimeSupport support() const;
    MonomialIdeal as_ideal(int r) const;
    friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
        return a.bounds == b.bounds;
    }
    friend bool operator<(const IrreducibleComponent& a, const IrreducibleComponent& b);
};

struct AssSet {
    std::vector<PrimeSupport> primes;  // sorted, deduplicated

    bool contains(const PrimeSupport& p) const;
    bool subset_of(const AssSet& other) const;
    friend bool operator==(const AssSet& a, const AssSet& b) { return a.primes == b.primes; }
    std::string str() const;
};

AssSet make_ass_set(std::vector<PrimeSupport> primes);

// Irredundant irreducible decomposition by recursive generator splitting:
// a generator u = x_i^a * v with coprime nontrivial parts splits I into
// (I + (x_i^a)) and (I + (v)). Terminal ideals are generated by pure powers.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

// Supports of the irredundant irreducible components (valid for monomial
// ideals).
AssSet associated_primes(const MonomialIdeal& ideal);

// Independent cross-check for closures of powers: Ass(R/I) minus the
// maximal ideal is the union over variables of Ass of the one-variable
// localizations, and the maximal ideal enters iff the socle test fires.
AssSet ass_via_localization(const MonomialIdeal& closure_ideal);

// A monomial f of the given degree with colon(I, f) = (x_i : i in p), if one
// exists; exhaustive over exponent vectors of that degree.
std::optional<Monomial> witness_search(const MonomialIdeal& ideal, const PrimeSupport& p,
                                       long long degree);

}  // namespace icstab
