#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "icstab/monomial.hpp"

namespace icstab {

struct LcmLattice {
    std::vector<Monomial> elements;  // graded-lex sorted, includes the generators
};

// Join-closure of the generator set under coordinatewise max.
LcmLattice lcm_lattice(const MonomialIdeal& ideal);

// Simplicial complex on variable indices; faces as bitmasks over bit i-1 for
// variable i. A nonvoid complex always lists the empty face 0.
struct SimplicialComplex {
    bool void_complex = true;
    std::vector<uint32_t> faces;
};

// K^alpha = { squarefree gamma <= supp(alpha) : x^(alpha-gamma) in I }.
SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& alpha);

// ranks[k] = dim of reduced homology in simplicial degree k-1, so ranks[0]
// counts H~(-1) (1 exactly for the complex {empty face}) and ranks[k] equals
// the Betti contribution beta_{k,alpha} when applied to K^alpha.
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& complex);

struct BettiTable {
    // (homological index i, multidegree) -> rank, nonzero entries only
    std::vector<std::tuple<int, Monomial, long long>> entries;
    std::map<int, long long> totals() const;
    long long projective_dimension() const;  // of the ideal, -1 when empty
};

BettiTable betti_numbers(const MonomialIdeal& ideal);

// depth R/I = r - pd(R/I) with pd(R/I) = 1 + max{ i : beta_i(I) != 0 },
// cross-checked against the socle test (depth 0 iff the maximal ideal is
// associated). Zero ideal has depth r; the unit ideal is rejected.
int depth_quotient(const MonomialIdeal& ideal, int r);

}  // namespace icstab
