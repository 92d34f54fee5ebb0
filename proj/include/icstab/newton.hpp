#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "icstab/monomial.hpp"

namespace icstab {

// Lattice membership in the scaled Newton polyhedron: alpha lies in n.NP(I)
// iff rationals lambda_g >= 0 exist with sum(lambda) = n and
// sum(lambda_g * g) <= alpha coordinatewise. Decided by exact LP: maximize
// sum(lambda) subject to the dominance constraints; member iff optimum >= n.
bool np_member(const MonomialIdeal& ideal, int n, const Monomial& alpha);

// Minimal monomial generators of the integral closure of ideal^n, found by
// walking lattice points of the enumeration box degree by degree.
MonomialIdeal closure_power(const MonomialIdeal& ideal, int n);

bool is_integrally_closed(const MonomialIdeal& ideal);

// Independent oracle for np_member built on plain monomial arithmetic:
// the smallest m <= m_max with x^(m*alpha) in ideal^(n*m), if any.
std::optional<int> power_certificate(const MonomialIdeal& ideal, int n, const Monomial& alpha,
                                     int m_max);

// The candidate box closure_power scans; exposed so oracle suites can sweep
// exactly the same lattice points.
struct ClosureBox {
    std::vector<long long> caps;  // per-coordinate bound
    long long degree_min = 0;
    long long degree_max = 0;
};
ClosureBox closure_box(const MonomialIdeal& ideal, int n);

// Calls fn for every nonnegative integer vector below caps with coordinate
// sum equal to degree.
void for_each_box_point(const std::vector<long long>& caps, long long degree,
                        const std::function<void(const std::vector<long long>&)>& fn);

}  // namespace icstab
