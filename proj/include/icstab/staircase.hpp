#pragma once

#include <vector>

#include "icstab/monomial.hpp"

namespace icstab {

// Dense membership table for a monomial ideal over the box [0, caps], where
// caps is the coordinatewise maximum of the minimal generators. Monomials
// outside the box reduce into it: truncating a coordinate to its cap does
// not change membership, because every generator already fits under caps.
class StaircaseBox {
public:
    explicit StaircaseBox(const MonomialIdeal& ideal);

    const std::vector<long long>& caps() const { return caps_; }
    long long box_size() const { return static_cast<long long>(member_.size()); }

    bool member(const std::vector<long long>& point_in_box) const {
        return member_[index_of(point_in_box)] != 0;
    }
    bool member_truncated(std::vector<long long> point) const;

    // alpha_i is "tight" when some generator below alpha matches it exactly
    // in coordinate i; a box point is an lcm-lattice element iff it is a
    // member and every positive coordinate is tight.
    bool lattice_point(const std::vector<long long>& point_in_box) const;

    long long index_of(const std::vector<long long>& point_in_box) const {
        long long idx = 0;
        for (std::size_t i = 0; i < caps_.size(); ++i) idx += point_in_box[i] * strides_[i];
        return idx;
    }

    // iterate the whole box in mixed-radix order
    template <typename Fn>
    void for_each_point(Fn&& fn) const {
        std::vector<long long> point(caps_.size(), 0);
        for (;;) {
            fn(const_cast<const std::vector<long long>&>(point));
            std::size_t i = 0;
            for (; i < caps_.size(); ++i) {
                if (point[i] < caps_[i]) {
                    ++point[i];
                    break;
                }
                point[i] = 0;
            }
            if (i == caps_.size()) break;
        }
    }

private:
    std::vector<long long> caps_;
    std::vector<long long> strides_;
    std::vector<char> member_;
    std::vector<std::vector<char>> tight_;  // one table per coordinate
};

// Socle test: true iff I : m strictly contains I, i.e. some monomial outside
// I lands in I under every variable multiplication. Equivalent to
// saturate(I, full support) != I, since the saturation is I exactly when the
// first colon step already fixes I.
bool maximal_in_ass(const MonomialIdeal& ideal);

}  // namespace icstab
