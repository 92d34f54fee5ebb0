#include "icstab/decomp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "icstab/newton.hpp"
#include "icstab/staircase.hpp"

namespace icstab {

PrimeSupport IrreducibleComponent::support() const {
    PrimeSupport p;
    for (const auto& [var, exp] : bounds) p.support.push_back(var);
    return p;
}

MonomialIdeal IrreducibleComponent::as_ideal(int r) const {
    std::vector<Monomial> gens;
    for (const auto& [var, exp] : bounds) gens.push_back(Monomial::variable(r, var, exp));
    return make_ideal(r, std::move(gens));
}

bool operator<(const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.bounds < b.bounds;
}

bool AssSet::contains(const PrimeSupport& p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

bool AssSet::subset_of(const AssSet& other) const {
    for (const auto& p : primes)
        if (!other.contains(p)) return false;
    return true;
}

std::string AssSet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i) out += ", ";
        out += primes[i].str();
    }
    return out + "}";
}

AssSet make_ass_set(std::vector<PrimeSupport> primes) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return AssSet{std::move(primes)};
}

namespace {

using ComponentList = std::vector<IrreducibleComponent>;

std::vector<long long> memo_key(const MonomialIdeal& ideal) {
    std::vector<long long> key;
    key.push_back(ideal.gens().size());
    for (const auto& g : ideal.gens())
        for (int i = 0; i < ideal.ambient(); ++i) key.push_back(g[i].to_int64());
    return key;
}

void split_rec(const MonomialIdeal& ideal, std::map<std::vector<long long>, ComponentList>& memo,
               ComponentList& out) {
    // pivot: first generator (graded-lex order) with at least two support
    // variables, split on its first variable's pure power vs. the rest
    const Monomial* pivot = nullptr;
    for (const auto& g : ideal.gens()) {
        if (g.support_size() >= 2) {
            pivot = &g;
            break;
        }
    }
    if (!pivot) {
        IrreducibleComponent comp;
        for (const auto& g : ideal.gens())
            for (int i = 0; i < ideal.ambient(); ++i)
                if (!g[i].is_zero()) comp.bounds.emplace_back(i + 1, g[i]);
        std::sort(comp.bounds.begin(), comp.bounds.end());
        out.push_back(std::move(comp));
        return;
    }
    std::vector<long long> key = memo_key(ideal);
    auto hit = memo.find(key);
    if (hit != memo.end()) {
        out.insert(out.end(), hit->second.begin(), hit->second.end());
        return;
    }
    int var = 0;
    while ((*pivot)[var].is_zero()) ++var;
    Monomial pure = Monomial::variable(ideal.ambient(), var + 1, (*pivot)[var]);
    Monomial rest = pivot->quotient_by(pure);

    ComponentList local;
    std::vector<Monomial> gens = ideal.gens();
    gens.push_back(pure);
    split_rec(make_ideal(ideal.ambient(), gens), memo, local);
    gens.back() = rest;
    split_rec(make_ideal(ideal.ambient(), std::move(gens)), memo, local);

    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    memo.emplace(std::move(key), local);
    out.insert(out.end(), local.begin(), local.end());
}

// Q_b inside Q_a iff every bound of Q_a also binds Q_b at least as tightly:
// support(a) within support(b) with a_i <= b_i there.
bool component_contains(const IrreducibleComponent& outer, const IrreducibleComponent& inner) {
    for (const auto& [var, exp] : inner.bounds) {
        auto it = std::lower_bound(outer.bounds.begin(), outer.bounds.end(),
                                   std::make_pair(var, BigInt(0)),
                                   [](const auto& x, const auto& y) { return x.first < y.first; });
        if (it == outer.bounds.end() || it->first != var || it->second > exp) return false;
    }
    return true;
}

void verify_decomposition(const MonomialIdeal& ideal, const ComponentList& comps) {
    // the intersection of the components must reproduce the ideal exactly;
    // small cases re-intersect literally, larger ones compare membership
    // over the exponent box, which carries the same information
    if (comps.size() <= 12) {
        MonomialIdeal meet = comps[0].as_ideal(ideal.ambient());
        for (std::size_t i = 1; i < comps.size(); ++i)
            meet = intersect(meet, comps[i].as_ideal(ideal.ambient()));
        if (!equal(meet, ideal))
            throw std::logic_error("irreducible_decomposition: re-intersection mismatch");
        return;
    }
    StaircaseBox box(ideal);
    const int r = ideal.ambient();
    std::vector<std::vector<std::pair<int, long long>>> bounds;
    for (const auto& comp : comps) {
        std::vector<std::pair<int, long long>> b;
        for (const auto& [var, exp] : comp.bounds) b.emplace_back(var - 1, exp.to_int64());
        bounds.push_back(std::move(b));
    }
    bool mismatch = false;
    box.for_each_point([&](const std::vector<long long>& f) {
        if (mismatch) return;
        bool in_all = true;
        for (const auto& b : bounds) {
            bool in_comp = false;
            for (const auto& [var, exp] : b) {
                if (f[var] >= exp) {
                    in_comp = true;
                    break;
                }
            }
            if (!in_comp) {
                in_all = false;
                break;
            }
        }
        if (in_all != box.member(f)) mismatch = true;
    });
    if (mismatch) throw std::logic_error("irreducible_decomposition: intersection mismatch");
    (void)r;
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw std::invalid_argument("irreducible_decomposition: ideal must be nonzero and proper");
    std::map<std::vector<long long>, ComponentList> memo;
    ComponentList all;
    split_rec(ideal, memo, all);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    // prune components containing another one; irreducible monomial ideals
    // are intersection-prime, so pairwise pruning yields irredundancy
    ComponentList kept;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < all.size() && !redundant; ++j)
            if (i != j && component_contains(all[i], all[j])) redundant = true;
        if (!redundant) kept.push_back(all[i]);
    }
    verify_decomposition(ideal, kept);
    return kept;
}

AssSet associated_primes(const MonomialIdeal& ideal) {
    std::vector<PrimeSupport> primes;
    for (const auto& comp : irreducible_decomposition(ideal)) primes.push_back(comp.support());
    return make_ass_set(std::move(primes));
}

AssSet ass_via_localization(const MonomialIdeal& closure_ideal) {
    if (closure_ideal.is_zero() || closure_ideal.is_unit())
        throw std::invalid_argument("ass_via_localization: ideal must be nonzero and proper");
    std::vector<PrimeSupport> primes;
    for (int v = 1; v <= closure_ideal.ambient(); ++v) {
        MonomialIdeal localized = localize(closure_ideal, {v});
        if (localized.is_unit() || localized.is_zero()) continue;
        for (auto& p : associated_primes(localized).primes) primes.push_back(std::move(p));
    }
    if (maximal_in_ass(closure_ideal)) {
        PrimeSupport full;
        for (int v = 1; v <= closure_ideal.ambient(); ++v) full.support.push_back(v);
        primes.push_back(std::move(full));
    }
    return make_ass_set(std::move(primes));
}

std::optional<Monomial> witness_search(const MonomialIdeal& ideal, const PrimeSupport& p,
                                       long long degree) {
    if (degree < 0) throw std::invalid_argument("witness_search: negative degree");
    std::vector<Monomial> prime_gens;
    for (int v : p.support) prime_gens.push_back(Monomial::variable(ideal.ambient(), v));
    MonomialIdeal prime = make_ideal(ideal.ambient(), std::move(prime_gens));

    std::vector<long long> caps(ideal.ambient(), degree);
    std::optional<Monomial> hit;
    for_each_box_point(caps, degree, [&](const std::vector<long long>& alpha) {
        if (hit) return;
        std::vector<BigInt> e(alpha.begin(), alpha.end());
        Monomial f(std::move(e));
        if (equal(colon(ideal, f), prime)) hit = std::move(f);
    });
    return hit;
}

}  // namespace icstab
