#pragma once

#include <vector>

#include "icstab/bigint.hpp"

namespace icstab {

struct LpResult {
    bool bounded = true;
    Rational optimum;                // meaningful when bounded
    std::vector<Rational> solution;  // structural variables, when bounded
};

// Exact simplex for  max c.x  subject to  A x <= b, x >= 0  with b >= 0
// (the origin is feasible, so no phase-one step is needed). The tableau is
// kept integer with a running common denominator; each pivot divides out the
// previous pivot element exactly, so no fractions or gcds ever appear.
// Bland's rule picks the pivot, which rules out cycling.
LpResult solve_max_lp(const std::vector<std::vector<BigInt>>& A,
                      const std::vector<BigInt>& b, const std::vector<BigInt>& c);

}  // namespace icstab
