#include "icstab/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "icstab/staircase.hpp"

namespace icstab {

namespace {

// rank over Q by fraction-free Bareiss elimination
long long matrix_rank_exact(std::vector<std::vector<BigInt>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    BigInt prev(1);
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = BigInt::divexact(m[rank][col] * m[i][j] - m[i][col] * m[rank][j], prev);
            m[i][col] = BigInt(0);
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<long long>(rank);
}

}  // namespace

LcmLattice lcm_lattice(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw std::invalid_argument("lcm_lattice: ideal must be nonzero and proper");
    std::vector<Monomial> elements = ideal.gens();
    std::vector<Monomial> frontier = elements;
    auto known = [&](const Monomial& m) {
        return std::find(elements.begin(), elements.end(), m) != elements.end();
    };
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto& f : frontier) {
            for (const auto& g : ideal.gens()) {
                Monomial join = f.lcm(g);
                if (!known(join) &&
                    std::find(next.begin(), next.end(), join) == next.end())
                    next.push_back(join);
            }
        }
        elements.insert(elements.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(elements.begin(), elements.end());
    return LcmLattice{std::move(elements)};
}

SimplicialComplex upper_koszul(const MonomialIdeal& ideal, const Monomial& alpha) {
    if (alpha.vars() != ideal.ambient())
        throw std::invalid_argument("upper_koszul: dimension mismatch");
    if (!contains(ideal, alpha))
        throw std::invalid_argument("upper_koszul: alpha does not dominate any generator");
    uint32_t supp = 0;
    for (int i = 0; i < alpha.vars(); ++i)
        if (!alpha[i].is_zero()) supp |= uint32_t{1} << i;
    SimplicialComplex complex;
    complex.void_complex = false;
    for (uint32_t gamma = supp;; gamma = (gamma - 1) & supp) {
        std::vector<BigInt> e = alpha.exponents();
        for (int i = 0; i < alpha.vars(); ++i)
            if (gamma >> i & 1) e[i] = e[i] - BigInt(1);
        if (contains(ideal, Monomial(std::move(e)))) complex.faces.push_back(gamma);
        if (gamma == 0) break;
    }
    std::sort(complex.faces.begin(), complex.faces.end());
    return complex;
}

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& complex) {
    if (complex.void_complex || complex.faces.empty()) return {};
    int max_card = 0;
    for (uint32_t f : complex.faces) max_card = std::max(max_card, __builtin_popcount(f));
    std::vector<std::vector<uint32_t>> by_card(max_card + 1);
    for (uint32_t f : complex.faces) by_card[__builtin_popcount(f)].push_back(f);

    // boundary matrices between consecutive cardinalities; the empty face at
    // cardinality 0 makes the complex reduced automatically
    std::vector<long long> boundary_rank(max_card + 2, 0);
    for (int c = 1; c <= max_card; ++c) {
        const auto& rows_faces = by_card[c - 1];
        const auto& cols_faces = by_card[c];
        if (rows_faces.empty() || cols_faces.empty()) continue;
        std::vector<std::vector<BigInt>> m(rows_faces.size(),
                                           std::vector<BigInt>(cols_faces.size(), BigInt(0)));
        for (std::size_t j = 0; j < cols_faces.size(); ++j) {
            uint32_t face = cols_faces[j];
            int sign = 1;
            for (uint32_t bits = face; bits; bits &= bits - 1) {
                uint32_t vertex = bits & ~(bits - 1);
                uint32_t sub = face & ~vertex;
                auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), sub);
                if (it != rows_faces.end() && *it == sub)
                    m[it - rows_faces.begin()][j] = BigInt(sign);
                sign = -sign;
            }
        }
        boundary_rank[c] = matrix_rank_exact(std::move(m));
    }
    std::vector<long long> ranks(max_card + 1, 0);
    for (int c = 0; c <= max_card; ++c)
        ranks[c] = static_cast<long long>(by_card[c].size()) - boundary_rank[c] -
                   boundary_rank[c + 1];
    while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
    return ranks;
}

namespace {

// Upper-Koszul homology of a box point, with faces read from the staircase
// table instead of divisibility scans.
std::vector<long long> koszul_ranks_at(const StaircaseBox& box,
                                       const std::vector<long long>& alpha) {
    const int r = static_cast<int>(box.caps().size());
    std::vector<int> supp_vars;
    for (int i = 0; i < r; ++i)
        if (alpha[i] > 0) supp_vars.push_back(i);
    SimplicialComplex complex;
    complex.void_complex = false;
    std::vector<long long> shifted(alpha);
    const uint32_t full = (uint32_t{1} << supp_vars.size()) - 1;
    for (uint32_t local = full;; local = (local - 1) & full) {
        shifted = alpha;
        uint32_t gamma = 0;
        for (std::size_t k = 0; k < supp_vars.size(); ++k) {
            if (local >> k & 1) {
                shifted[supp_vars[k]] -= 1;
                gamma |= uint32_t{1} << supp_vars[k];
            }
        }
        if (box.member(shifted)) complex.faces.push_back(gamma);
        if (local == 0) break;
    }
    std::sort(complex.faces.begin(), complex.faces.end());
    return reduced_homology_ranks(complex);
}

}  // namespace

BettiTable betti_numbers(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw std::invalid_argument("betti_numbers: ideal must be nonzero and proper");
    StaircaseBox box(ideal);
    BettiTable table;
    box.for_each_point([&](const std::vector<long long>& alpha) {
        if (!box.lattice_point(alpha)) return;
        std::vector<long long> ranks = koszul_ranks_at(box, alpha);
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            if (ranks[i] == 0) continue;
            std::vector<BigInt> e(alpha.begin(), alpha.end());
            table.entries.emplace_back(static_cast<int>(i), Monomial(std::move(e)), ranks[i]);
        }
    });
    std::sort(table.entries.begin(), table.entries.end(),
              [](const auto& a, const auto& b) {
                  if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
                  return std::get<1>(a) < std::get<1>(b);
              });
    return table;
}

std::map<int, long long> BettiTable::totals() const {
    std::map<int, long long> out;
    for (const auto& [i, alpha, rank] : entries) out[i] += rank;
    return out;
}

long long BettiTable::projective_dimension() const {
    long long pd = -1;
    for (const auto& [i, alpha, rank] : entries) pd = std::max(pd, static_cast<long long>(i));
    return pd;
}

int depth_quotient(const MonomialIdeal& ideal, int r) {
    if (r != ideal.ambient()) throw std::invalid_argument("depth_quotient: ambient mismatch");
    if (ideal.is_unit()) throw std::invalid_argument("depth_quotient: unit ideal");
    if (ideal.is_zero()) return r;

    StaircaseBox box(ideal);
    long long pd_ideal = -1;
    box.for_each_point([&](const std::vector<long long>& alpha) {
        if (!box.lattice_point(alpha)) return;
        std::vector<long long> ranks = koszul_ranks_at(box, alpha);
        for (std::size_t i = ranks.size(); i-- > 0;) {
            if (ranks[i] != 0) {
                pd_ideal = std::max(pd_ideal, static_cast<long long>(i));
                break;
            }
        }
    });
    if (pd_ideal < 0) throw std::logic_error("depth_quotient: no Betti numbers found");
    int depth = r - static_cast<int>(pd_ideal + 1);
    // depth 0 must coincide with the socle test; two independent routes
    bool socle = maximal_in_ass(ideal);
    if ((depth == 0) != socle)
        throw std::logic_error("depth_quotient: homology and socle test disagree");
    return depth;
}

}  // namespace icstab
