#include "icstab/newton.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "icstab/simplex.hpp"

namespace icstab {

namespace {

std::vector<std::vector<long long>> gens_as_int64(const MonomialIdeal& ideal) {
    std::vector<std::vector<long long>> out;
    out.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) {
        std::vector<long long> v(ideal.ambient());
        for (int i = 0; i < ideal.ambient(); ++i) {
            if (!g[i].fits_int64())
                throw std::invalid_argument("closure enumeration: exponent too large");
            v[i] = g[i].to_int64();
        }
        out.push_back(std::move(v));
    }
    return out;
}

void box_point_rec(const std::vector<long long>& caps,
                   const std::vector<long long>& suffix_cap_sum, std::size_t idx,
                   long long remaining, std::vector<long long>& point,
                   const std::function<void(const std::vector<long long>&)>& fn) {
    if (idx + 1 == caps.size()) {
        point[idx] = remaining;
        fn(point);
        return;
    }
    long long lo = std::max<long long>(0, remaining - suffix_cap_sum[idx + 1]);
    long long hi = std::min(caps[idx], remaining);
    for (long long take = lo; take <= hi; ++take) {
        point[idx] = take;
        box_point_rec(caps, suffix_cap_sum, idx + 1, remaining - take, point, fn);
    }
}

}  // namespace

void for_each_box_point(const std::vector<long long>& caps, long long degree,
                        const std::function<void(const std::vector<long long>&)>& fn) {
    if (caps.empty()) {
        if (degree == 0) fn({});
        return;
    }
    std::vector<long long> suffix(caps.size() + 1, 0);
    for (std::size_t i = caps.size(); i-- > 0;) suffix[i] = suffix[i + 1] + caps[i];
    if (degree < 0 || degree > suffix[0]) return;
    std::vector<long long> point(caps.size(), 0);
    box_point_rec(caps, suffix, 0, degree, point, fn);
}

bool np_member(const MonomialIdeal& ideal, int n, const Monomial& alpha) {
    if (n < 1) throw std::invalid_argument("np_member: power must be positive");
    if (alpha.vars() != ideal.ambient()) throw std::invalid_argument("np_member: dimension mismatch");
    if (ideal.is_zero()) return false;
    if (ideal.is_unit()) return true;

    const std::size_t g = ideal.gens().size();
    const int r = ideal.ambient();
    std::vector<std::vector<BigInt>> a(r, std::vector<BigInt>(g));
    for (std::size_t j = 0; j < g; ++j)
        for (int i = 0; i < r; ++i) a[i][j] = ideal.gens()[j][i];
    std::vector<BigInt> b(alpha.exponents());
    std::vector<BigInt> c(g, BigInt(1));
    LpResult lp = solve_max_lp(a, b, c);
    if (!lp.bounded) throw std::logic_error("np_member: LP unbounded for proper ideal");
    return lp.optimum >= Rational(BigInt(n));
}

ClosureBox closure_box(const MonomialIdeal& ideal, int n) {
    if (ideal.is_zero() || ideal.is_unit())
        throw std::invalid_argument("closure_box: ideal must be nonzero and proper");
    auto gens = gens_as_int64(ideal);
    const int r = ideal.ambient();
    ClosureBox box;
    box.caps.assign(r, 0);
    long long deg_min = -1, deg_max_gen = 0;
    for (const auto& g : gens) {
        long long deg = 0;
        for (int i = 0; i < r; ++i) {
            deg += g[i];
            box.caps[i] = std::max(box.caps[i], g[i]);
        }
        if (deg_min < 0 || deg < deg_min) deg_min = deg;
        deg_max_gen = std::max(deg_max_gen, deg);
    }
    long long cap_total = 0;
    for (auto& cap : box.caps) {
        // If alpha_i exceeded n * max_g g_i, every representation
        // sum(lambda_g g) <= alpha would keep slack >= 1 in coordinate i,
        // so alpha - e_i would stay in n.NP(I) and alpha could not be a
        // minimal generator. Hence the per-coordinate cap.
        cap *= n;
        if (cap > 2000000) throw std::invalid_argument("closure_box: box too large");
        cap_total += cap;
    }
    box.degree_min = deg_min * n;
    // A minimal point alpha has representation slack v = alpha - sum(lambda_g g)
    // with every v_i < 1, else alpha - e_i would still lie in n.NP(I). So
    // |alpha| = sum(lambda_g |g|) + |v| < n*D + r, i.e. |alpha| <= n*D + r - 1.
    box.degree_max = std::min(deg_max_gen * n + r - 1, cap_total);
    return box;
}

MonomialIdeal closure_power(const MonomialIdeal& ideal, int n) {
    if (n < 1) throw std::invalid_argument("closure_power: power must be positive");
    if (ideal.is_zero()) throw std::invalid_argument("closure_power: zero ideal");
    if (ideal.is_unit()) return unit_ideal(ideal.ambient());

    const int r = ideal.ambient();
    ClosureBox box = closure_box(ideal, n);

    // packed 64-bit keys for box points
    long long max_cap = 0;
    for (long long cap : box.caps) max_cap = std::max(max_cap, cap);
    int bits = 1;
    while ((1LL << bits) <= max_cap) ++bits;
    if (bits * r > 63) throw std::invalid_argument("closure_power: instance too large to pack");
    auto pack = [bits, r](const std::vector<long long>& v) {
        uint64_t key = 0;
        for (int i = 0; i < r; ++i) key = (key << bits) | static_cast<uint64_t>(v[i]);
        return key;
    };

    MonomialIdeal plain_power = power(ideal, n);
    std::unordered_set<uint64_t> seeds;
    for (const auto& g : plain_power.gens()) {
        std::vector<long long> v(r);
        bool in_box = true;
        long long deg = 0;
        for (int i = 0; i < r; ++i) {
            v[i] = g[i].to_int64();
            deg += v[i];
            if (v[i] > box.caps[i]) in_box = false;
        }
        if (in_box && deg <= box.degree_max) seeds.insert(pack(v));
    }

    // vertex-cover style prefilter: membership in the symbolic power is
    // necessary, and for squarefree ideals it reads off the minimal primes
    std::vector<uint64_t> cover_masks;
    if (ideal.is_squarefree()) {
        for (const auto& p : minimal_primes(ideal)) {
            uint64_t mask = 0;
            for (int v : p.support) mask |= uint64_t{1} << (v - 1);
            cover_masks.push_back(mask);
        }
    }

    std::vector<Monomial> found;
    std::unordered_set<uint64_t> prev_members, cur_members;
    for (long long d = box.degree_min; d <= box.degree_max; ++d) {
        cur_members.clear();
        for_each_box_point(box.caps, d, [&](const std::vector<long long>& alpha) {
            uint64_t key = pack(alpha);
            for (int i = 0; i < r; ++i) {
                if (alpha[i] > 0) {
                    uint64_t divisor_key = key - (uint64_t{1} << (bits * (r - 1 - i)));
                    if (prev_members.count(divisor_key)) {
                        cur_members.insert(key);
                        return;
                    }
                }
            }
            bool is_member;
            if (seeds.count(key)) {
                is_member = true;
            } else {
                for (uint64_t mask : cover_masks) {
                    long long s = 0;
                    for (int i = 0; i < r; ++i)
                        if (mask >> i & 1) s += alpha[i];
                    if (s < n) return;  // outside the symbolic power
                }
                std::vector<BigInt> e(alpha.begin(), alpha.end());
                is_member = np_member(ideal, n, Monomial(std::move(e)));
            }
            if (is_member) {
                cur_members.insert(key);
                std::vector<BigInt> e(alpha.begin(), alpha.end());
                found.emplace_back(std::move(e));
            }
        });
        std::swap(prev_members, cur_members);
    }

    MonomialIdeal closure = make_ideal(r, std::move(found));

    // containment sandwich, kept on in every build: ideal^n inside the
    // closure, and the closure inside the symbolic power (squarefree case,
    // checked through the cover inequalities)
    for (const auto& g : plain_power.gens())
        if (!contains(closure, g))
            throw std::logic_error("closure_power: power not contained in closure");
    for (const auto& g : closure.gens()) {
        for (uint64_t mask : cover_masks) {
            BigInt s(0);
            for (int i = 0; i < r; ++i)
                if (mask >> i & 1) s += g[i];
            if (s < BigInt(n))
                throw std::logic_error("closure_power: closure not contained in symbolic power");
        }
    }
    return closure;
}

bool is_integrally_closed(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw std::invalid_argument("is_integrally_closed: zero ideal");
    if (ideal.is_unit()) return true;
    return equal(closure_power(ideal, 1), ideal);
}

namespace {

struct CertSearch {
    const std::vector<std::vector<long long>>& gens;
    std::vector<long long> gen_degrees;
    long long min_gen_degree = 0;
    std::unordered_set<uint64_t> failed;
    int bits = 0;
    int r = 0;

    uint64_t pack(const std::vector<long long>& beta, int k) const {
        uint64_t key = static_cast<uint64_t>(k);
        for (int i = 0; i < r; ++i) key = (key << bits) | static_cast<uint64_t>(beta[i]);
        return key;
    }

    // can k generators (repetition allowed) fit coordinatewise under beta?
    bool can_pick(std::vector<long long>& beta, long long beta_degree, int k) {
        if (k == 0) return true;
        if (beta_degree < k * min_gen_degree) return false;
        uint64_t key = pack(beta, k);
        if (failed.count(key)) return false;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            bool fits = true;
            for (int i = 0; i < r; ++i) {
                if (gens[j][i] > beta[i]) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            for (int i = 0; i < r; ++i) beta[i] -= gens[j][i];
            bool ok = can_pick(beta, beta_degree - gen_degrees[j], k - 1);
            for (int i = 0; i < r; ++i) beta[i] += gens[j][i];
            if (ok) return true;
        }
        failed.insert(key);
        return false;
    }
};

}  // namespace

std::optional<int> power_certificate(const MonomialIdeal& ideal, int n, const Monomial& alpha,
                                     int m_max) {
    if (n < 1) throw std::invalid_argument("power_certificate: power must be positive");
    if (alpha.vars() != ideal.ambient())
        throw std::invalid_argument("power_certificate: dimension mismatch");
    if (ideal.is_zero()) return std::nullopt;
    if (ideal.is_unit()) return 1;

    auto gens = gens_as_int64(ideal);
    const int r = ideal.ambient();
    std::vector<long long> base(r);
    for (int i = 0; i < r; ++i) {
        if (!alpha[i].fits_int64())
            throw std::invalid_argument("power_certificate: exponent too large");
        base[i] = alpha[i].to_int64();
    }

    CertSearch search{gens, {}, 0, {}, 0, r};
    long long max_coord = 1;
    for (const auto& g : gens) {
        long long deg = 0;
        for (long long x : g) deg += x;
        search.gen_degrees.push_back(deg);
        if (search.min_gen_degree == 0 || deg < search.min_gen_degree)
            search.min_gen_degree = deg;
    }
    for (long long x : base) max_coord = std::max(max_coord, x * m_max);
    search.bits = 1;
    while ((1LL << search.bits) <= max_coord) ++search.bits;
    if (search.bits * r + 16 > 63)
        throw std::invalid_argument("power_certificate: instance too large to pack");

    // sort generators by degree descending: greedy picks succeed faster
    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return search.gen_degrees[a] > search.gen_degrees[b];
    });
    std::vector<std::vector<long long>> sorted_gens;
    std::vector<long long> sorted_degs;
    for (std::size_t i : order) {
        sorted_gens.push_back(gens[i]);
        sorted_degs.push_back(search.gen_degrees[i]);
    }
    CertSearch run{sorted_gens, sorted_degs, search.min_gen_degree, {}, search.bits, r};

    for (int m = 1; m <= m_max; ++m) {
        std::vector<long long> beta(r);
        long long beta_degree = 0;
        for (int i = 0; i < r; ++i) {
            beta[i] = base[i] * m;
            beta_degree += beta[i];
        }
        if (run.can_pick(beta, beta_degree, n * m)) return m;
    }
    return std::nullopt;
}

}  // namespace icstab
