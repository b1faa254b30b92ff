#ifndef SDC_BITVEC_HPP
#define SDC_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdc {

// Vector over GF(2), 64 coordinates packed per machine word.
// Coordinate i lives in word i/64 at bit i%64 (little-endian within words).
// Bits at positions >= size() are kept zero by every operation, so
// whole-word XOR and popcount never need a trailing mask.
class bit_vector {
public:
    bit_vector() = default;
    explicit bit_vector(std::size_t n) : len_(n), w_((n + 63) / 64, 0) {}

    static bit_vector from_string(std::string_view s) {
        bit_vector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.flip(i);
            else if (s[i] != '0')
                throw std::invalid_argument("bit_vector: character outside {0,1}");
        }
        return v;
    }

    static bit_vector unit(std::size_t n, std::size_t i) {
        bit_vector v(n);
        v.flip(i);
        return v;
    }

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    bool operator[](std::size_t i) const { return get(i); }

    void set(std::size_t i, bool b) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (b)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::size_t weight() const {
        std::size_t r = 0;
        for (std::uint64_t w : w_) r += std::size_t(std::popcount(w));
        return r;
    }

    bool zero() const {
        for (std::uint64_t w : w_)
            if (w) return false;
        return true;
    }

    // index of the first set coordinate, or size() when zero
    std::size_t first_set() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return (i << 6) + std::size_t(std::countr_zero(w_[i]));
        return len_;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        s.reserve(weight());
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                s.push_back((i << 6) + std::size_t(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return s;
    }

    bit_vector& operator^=(const bit_vector& o) {
        check_len(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend bit_vector operator^(bit_vector a, const bit_vector& b) {
        a ^= b;
        return a;
    }

    // parity of the standard inner product <*this, o>
    bool dot(const bit_vector& o) const {
        check_len(o);
        std::size_t c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += std::size_t(std::popcount(w_[i] & o.w_[i]));
        return c & 1u;
    }

    friend bool operator==(const bit_vector& a, const bit_vector& b) {
        return a.len_ == b.len_ && a.w_ == b.w_;
    }
    friend bool operator!=(const bit_vector& a, const bit_vector& b) { return !(a == b); }

    // strict total order: lexicographic on coordinates, position 0 most
    // significant; shorter vectors sort before longer ones
    bool lex_less(const bit_vector& o) const {
        if (len_ != o.len_) return len_ < o.len_;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t x = w_[i] ^ o.w_[i];
            if (x) {
                int t = std::countr_zero(x);
                return ((w_[i] >> t) & 1u) == 0;
            }
        }
        return false;
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    std::size_t hash_value() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ len_;
        for (std::uint64_t w : w_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return std::size_t(h);
    }

private:
    void check_len(const bit_vector& o) const {
        if (len_ != o.len_) throw std::invalid_argument("bit_vector: length mismatch");
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

struct bit_vector_hash {
    std::size_t operator()(const bit_vector& v) const { return v.hash_value(); }
};

struct bit_vector_lex {
    bool operator()(const bit_vector& a, const bit_vector& b) const { return a.lex_less(b); }
};

}  // namespace sdc

#endif
