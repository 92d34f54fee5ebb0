#include "icstab/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace icstab {

Monomial::Monomial(std::vector<BigInt> exponents) : e_(std::move(exponents)) {
    for (const auto& x : e_) {
        if (x.is_neg()) throw std::invalid_argument("Monomial: negative exponent");
        deg_ += x;
    }
}

Monomial Monomial::unit(int r) { return Monomial(std::vector<BigInt>(r, BigInt(0))); }

Monomial Monomial::of(std::vector<long long> exponents) {
    std::vector<BigInt> e(exponents.begin(), exponents.end());
    return Monomial(std::move(e));
}

Monomial Monomial::variable(int r, int index, BigInt exp) {
    if (index < 1 || index > r) throw std::invalid_argument("Monomial: variable index out of range");
    std::vector<BigInt> e(r, BigInt(0));
    e[index - 1] = std::move(exp);
    return Monomial(std::move(e));
}

bool Monomial::is_squarefree() const {
    for (const auto& x : e_)
        if (x > BigInt(1)) return false;
    return true;
}

int Monomial::support_size() const {
    int s = 0;
    for (const auto& x : e_)
        if (!x.is_zero()) ++s;
    return s;
}

bool Monomial::divides(const Monomial& other) const {
    if (e_.size() != other.e_.size()) throw std::invalid_argument("Monomial: dimension mismatch");
    if (deg_ > other.deg_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
    if (e_.size() != other.e_.size()) throw std::invalid_argument("Monomial: dimension mismatch");
    std::vector<BigInt> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
        e[i] = e_[i] >= other.e_[i] ? e_[i] : other.e_[i];
    return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.e_.size() != b.e_.size()) throw std::invalid_argument("Monomial: dimension mismatch");
    std::vector<BigInt> e(a.e_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.e_[i] + b.e_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::quotient_by(const Monomial& d) const {
    if (e_.size() != d.e_.size()) throw std::invalid_argument("Monomial: dimension mismatch");
    std::vector<BigInt> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
        e[i] = e_[i] > d.e_[i] ? e_[i] - d.e_[i] : BigInt(0);
    return Monomial(std::move(e));
}

int Monomial::compare(const Monomial& other) const {
    int c = deg_.compare(other.deg_);
    if (c != 0) return c;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        c = e_[i].compare(other.e_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string Monomial::str() const {
    if (is_unit()) return "1";
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i].is_zero()) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (e_[i] != BigInt(1)) out += "^" + e_[i].str();
    }
    return out;
}

std::string PrimeSupport::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (i) out += ",";
        out += "x" + std::to_string(support[i]);
    }
    return out + ")";
}

bool MonomialIdeal::is_squarefree() const {
    for (const auto& g : gens_)
        if (!g.is_squarefree()) return false;
    return true;
}

namespace {

// Reduce to the divisibility-minimal antichain, sorted in graded-lex order.
// Within a fixed degree distinct monomials are incomparable, so after the
// graded sort only strictly smaller predecessors can divide.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& k : kept) {
            if (k.degree() >= g.degree()) break;
            if (k.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(g);
    }
    return kept;
}

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("MonomialIdeal: ambient dimension mismatch");
}

}  // namespace

MonomialIdeal make_ideal(int r, std::vector<Monomial> gens) {
    if (r < 0) throw std::invalid_argument("make_ideal: negative ambient dimension");
    for (const auto& g : gens)
        if (g.vars() != r) throw std::invalid_argument("make_ideal: exponent vector length mismatch");
    MonomialIdeal ideal;
    ideal.ambient_ = r;
    ideal.gens_ = minimalize(std::move(gens));
    return ideal;
}

MonomialIdeal zero_ideal(int r) { return make_ideal(r, {}); }

MonomialIdeal unit_ideal(int r) { return make_ideal(r, {Monomial::unit(r)}); }

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (auto [u, v] : g.edges()) {
        std::vector<BigInt> e(g.vertex_count(), BigInt(0));
        e[u - 1] = BigInt(1);
        e[v - 1] = BigInt(1);
        gens.emplace_back(std::move(e));
    }
    return make_ideal(g.vertex_count(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    std::vector<Monomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return make_ideal(a.ambient(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& x : a.gens())
        for (const auto& y : b.gens()) gens.push_back(x * y);
    return make_ideal(a.ambient(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, int n) {
    if (n < 0) throw std::invalid_argument("power: negative exponent");
    if (n == 0) return unit_ideal(a.ambient());
    MonomialIdeal result = a;
    for (int i = 1; i < n; ++i) result = product(result, a);
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& x : a.gens())
        for (const auto& y : b.gens()) gens.push_back(x.lcm(y));
    return make_ideal(a.ambient(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& f) {
    if (f.vars() != a.ambient()) throw std::invalid_argument("colon: dimension mismatch");
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size());
    for (const auto& g : a.gens()) gens.push_back(g.quotient_by(f));
    return make_ideal(a.ambient(), std::move(gens));
}

MonomialIdeal colon_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    if (b.is_zero()) return unit_ideal(a.ambient());
    MonomialIdeal result = colon(a, b.gens()[0]);
    for (std::size_t i = 1; i < b.gens().size(); ++i)
        result = intersect(result, colon(a, b.gens()[i]));
    return result;
}

bool contains(const MonomialIdeal& a, const Monomial& f) {
    if (f.vars() != a.ambient()) throw std::invalid_argument("contains: dimension mismatch");
    for (const auto& g : a.gens()) {
        if (g.degree() > f.degree()) return false;
        if (g.divides(f)) return true;
    }
    return false;
}

bool contains_ideal(const MonomialIdeal& outer, const MonomialIdeal& inner) {
    for (const auto& g : inner.gens())
        if (!contains(outer, g)) return false;
    return true;
}

MonomialIdeal localize(const MonomialIdeal& a, const std::vector<int>& inverted_vars) {
    std::vector<char> invert(a.ambient() + 1, 0);
    for (int v : inverted_vars) {
        if (v < 1 || v > a.ambient()) throw std::invalid_argument("localize: variable out of range");
        invert[v] = 1;
    }
    std::vector<Monomial> gens;
    gens.reserve(a.gens().size());
    for (const auto& g : a.gens()) {
        std::vector<BigInt> e = g.exponents();
        for (int i = 0; i < a.ambient(); ++i)
            if (invert[i + 1]) e[i] = BigInt(0);
        gens.emplace_back(std::move(e));
    }
    return make_ideal(a.ambient(), std::move(gens));
}

MonomialIdeal saturate(const MonomialIdeal& a, const PrimeSupport& p) {
    std::vector<Monomial> prime_gens;
    for (int v : p.support) prime_gens.push_back(Monomial::variable(a.ambient(), v));
    MonomialIdeal prime = make_ideal(a.ambient(), std::move(prime_gens));
    MonomialIdeal cur = a;
    for (;;) {
        MonomialIdeal next = colon_ideal(cur, prime);
        if (equal(next, cur)) return cur;
        cur = std::move(next);
    }
}

std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& squarefree) {
    if (!squarefree.is_squarefree())
        throw std::invalid_argument("minimal_primes: ideal is not squarefree");
    if (squarefree.is_zero() || squarefree.is_unit())
        throw std::invalid_argument("minimal_primes: ideal must be nonzero and proper");
    int r = squarefree.ambient();
    if (r > 20) throw std::invalid_argument("minimal_primes: ambient dimension too large");
    std::vector<uint32_t> supports;
    for (const auto& g : squarefree.gens()) {
        uint32_t s = 0;
        for (int i = 0; i < r; ++i)
            if (!g[i].is_zero()) s |= uint32_t{1} << i;
        supports.push_back(s);
    }
    // independent = contains no generator support; covers are complements of
    // maximal independent sets
    std::vector<uint32_t> maximal_independent;
    for (uint32_t set = 0; set < (uint32_t{1} << r); ++set) {
        bool independent = true;
        for (uint32_t s : supports) {
            if ((s & set) == s) {
                independent = false;
                break;
            }
        }
        if (!independent) continue;
        bool maximal = true;
        for (int v = 0; v < r && maximal; ++v) {
            if (set >> v & 1) continue;
            uint32_t bigger = set | (uint32_t{1} << v);
            bool still = true;
            for (uint32_t s : supports) {
                if ((s & bigger) == s) {
                    still = false;
                    break;
                }
            }
            if (still) maximal = false;
        }
        if (maximal) maximal_independent.push_back(set);
    }
    std::vector<PrimeSupport> primes;
    for (uint32_t ind : maximal_independent) {
        PrimeSupport p;
        for (int v = 0; v < r; ++v)
            if (!(ind >> v & 1)) p.support.push_back(v + 1);
        primes.push_back(std::move(p));
    }
    std::sort(primes.begin(), primes.end());
    return primes;
}

MonomialIdeal prime_power_ideal(const PrimeSupport& p, int n, int r) {
    if (n < 1) throw std::invalid_argument("prime_power_ideal: power must be positive");
    std::vector<Monomial> gens;
    std::vector<BigInt> e(r, BigInt(0));
    // all degree-n monomials supported on p
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (idx + 1 == p.support.size()) {
            e[p.support[idx] - 1] = BigInt(remaining);
            gens.emplace_back(e);
            e[p.support[idx] - 1] = BigInt(0);
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            e[p.support[idx] - 1] = BigInt(take);
            self(self, idx + 1, remaining - take);
        }
        e[p.support[idx] - 1] = BigInt(0);
    };
    if (p.support.empty()) throw std::invalid_argument("prime_power_ideal: empty support");
    rec(rec, 0, n);
    return make_ideal(r, std::move(gens));
}

MonomialIdeal symbolic_power(const MonomialIdeal& squarefree, int n) {
    if (n < 1) throw std::invalid_argument("symbolic_power: power must be positive");
    if (!squarefree.is_squarefree())
        throw std::invalid_argument("symbolic_power: ideal is not squarefree");
    if (squarefree.is_zero()) return zero_ideal(squarefree.ambient());
    if (squarefree.is_unit()) return unit_ideal(squarefree.ambient());
    std::vector<PrimeSupport> primes = minimal_primes(squarefree);
    MonomialIdeal result = prime_power_ideal(primes[0], n, squarefree.ambient());
    for (std::size_t i = 1; i < primes.size(); ++i)
        result = intersect(result, prime_power_ideal(primes[i], n, squarefree.ambient()));
    return result;
}

bool equal(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_ambient(a, b);
    return a.gens() == b.gens();
}

MonomialIdeal extend_ambient(const MonomialIdeal& a, int new_r, int offset) {
    if (offset < 0 || a.ambient() + offset > new_r)
        throw std::invalid_argument("extend_ambient: variables do not fit");
    std::vector<Monomial> gens;
    for (const auto& g : a.gens()) {
        std::vector<BigInt> e(new_r, BigInt(0));
        for (int i = 0; i < a.ambient(); ++i) e[i + offset] = g[i];
        gens.emplace_back(std::move(e));
    }
    return make_ideal(new_r, std::move(gens));
}

}  // namespace icstab
