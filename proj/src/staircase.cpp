#include "icstab/staircase.hpp"

#include <stdexcept>

namespace icstab {

StaircaseBox::StaircaseBox(const MonomialIdeal& ideal) {
    const int r = ideal.ambient();
    caps_.assign(r, 0);
    std::vector<std::vector<long long>> gens;
    for (const auto& g : ideal.gens()) {
        std::vector<long long> v(r);
        for (int i = 0; i < r; ++i) {
            if (!g[i].fits_int64())
                throw std::invalid_argument("StaircaseBox: exponent too large");
            v[i] = g[i].to_int64();
            caps_[i] = std::max(caps_[i], v[i]);
        }
        gens.push_back(std::move(v));
    }
    long long size = 1;
    strides_.assign(r, 0);
    for (int i = 0; i < r; ++i) {
        strides_[i] = size;
        size *= caps_[i] + 1;
        if (size > 16'000'000)
            throw std::invalid_argument("StaircaseBox: box too large");
    }
    member_.assign(size, 0);
    tight_.assign(r, std::vector<char>(size, 0));
    for (const auto& g : gens) {
        long long idx = index_of(g);
        member_[idx] = 1;
        for (int i = 0; i < r; ++i) tight_[i][idx] = 1;
    }
    // upward-closure sweeps in mixed-radix order: every index increment in
    // coordinate i moves from v - e_i to v
    std::vector<long long> point(r, 0);
    for (long long idx = 0; idx < size; ++idx) {
        for (int i = 0; i < r; ++i) {
            if (point[i] == 0) continue;
            long long below = idx - strides_[i];
            if (member_[below]) member_[idx] = 1;
            for (int j = 0; j < r; ++j)
                if (j != i && tight_[j][below]) tight_[j][idx] = 1;
        }
        for (int i = 0; i < r; ++i) {
            if (point[i] < caps_[i]) {
                ++point[i];
                break;
            }
            point[i] = 0;
        }
    }
}

bool StaircaseBox::member_truncated(std::vector<long long> point) const {
    for (std::size_t i = 0; i < caps_.size(); ++i)
        if (point[i] > caps_[i]) point[i] = caps_[i];
    return member(point);
}

bool StaircaseBox::lattice_point(const std::vector<long long>& point) const {
    long long idx = index_of(point);
    if (!member_[idx]) return false;
    for (std::size_t i = 0; i < caps_.size(); ++i)
        if (point[i] > 0 && !tight_[i][idx]) return false;
    return true;
}

bool maximal_in_ass(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit()) return false;
    const int r = ideal.ambient();
    StaircaseBox box(ideal);
    bool found = false;
    std::vector<long long> up(r);
    box.for_each_point([&](const std::vector<long long>& f) {
        if (found || box.member(f)) return;
        for (int i = 0; i < r; ++i) {
            up = f;
            up[i] = std::min(up[i] + 1, box.caps()[i]);
            if (up[i] == f[i]) {
                // cap reached with f_i == cap: x_i * f is still outside I
                // iff f itself is, which it is
                return;
            }
            if (!box.member(up)) return;
        }
        found = true;
    });
    return found;
}

}  // namespace icstab
