#ifndef SDC_PERM_HPP
#define SDC_PERM_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdc/bitvec.hpp"

namespace sdc {

// Multiset of cycle lengths of a permutation, held as (length, count)
// pairs with lengths strictly decreasing.
struct cycle_type {
    std::vector<std::pair<std::size_t, std::size_t>> parts;

    std::size_t degree() const;

    // grammar: comma-separated len^count terms, count defaulting to 1,
    // e.g. "4^9" or "5^7,1"
    static cycle_type parse(std::string_view spec);
    std::string str() const;

    friend bool operator==(const cycle_type& a, const cycle_type& b) {
        return a.parts == b.parts;
    }
};

// Bijection on {0..n-1} held as its image table. All I/O uses 1-based
// cycle notation; the action on vectors follows the convention
// (p.v)_i = v_{p^-1(i)}, i.e. the bit at position j moves to p(j).
class permutation {
public:
    permutation() = default;
    explicit permutation(std::size_t n);  // identity

    static permutation from_images(std::vector<std::uint32_t> images);
    static permutation from_cycles(std::size_t n, std::string_view cycles);

    std::size_t size() const { return img_.size(); }
    std::uint32_t operator()(std::size_t i) const { return img_[i]; }
    const std::vector<std::uint32_t>& images() const { return img_; }

    bool is_identity() const;
    permutation inverse() const;
    std::size_t order() const;  // lcm of cycle lengths
    cycle_type type() const;

    // orbits as coordinate lists, each rotated to start at its minimum
    // element, sorted by that minimum
    std::vector<std::vector<std::size_t>> cycles() const;

    std::string to_cycles() const;  // 1-based; identity prints "()"

    bit_vector apply(const bit_vector& v) const;

    // composition: (p * q)(x) = p(q(x))
    friend permutation operator*(const permutation& p, const permutation& q);

    friend bool operator==(const permutation& a, const permutation& b) {
        return a.img_ == b.img_;
    }
    friend bool operator!=(const permutation& a, const permutation& b) { return !(a == b); }

private:
    std::vector<std::uint32_t> img_;
};

}  // namespace sdc

#endif
