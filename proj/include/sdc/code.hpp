#ifndef SDC_CODE_HPP
#define SDC_CODE_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "sdc/bitmat.hpp"

namespace sdc {

// Binary linear [n,k] code held as its reduced-row-echelon generator
// matrix, so two codes are equal exactly when their matrices are.
class linear_code {
public:
    linear_code() = default;

    // canonical code spanned by the given rows; dependent rows tolerated
    static linear_code from_generators(const std::vector<bit_vector>& rows);
    static linear_code from_matrix(const bit_matrix& m);
    static linear_code zero(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t k() const { return gen_.rows(); }
    const bit_matrix& generator() const { return gen_; }

    bool contains(const bit_vector& v) const { return sdc::contains(gen_, v); }

    friend bool operator==(const linear_code& a, const linear_code& b) {
        return a.n_ == b.n_ && a.gen_ == b.gen_;
    }
    friend bool operator!=(const linear_code& a, const linear_code& b) { return !(a == b); }

private:
    std::size_t n_ = 0;
    bit_matrix gen_;  // RREF, k rows, n columns
};

// Full-enumeration guard shared by every 2^k sweep below.
inline constexpr std::size_t enumeration_max_dim = 28;

// Visit every nonzero codeword exactly once, in Gray-code order over the
// generator coefficients (one row XOR per step). Requires k <= 63; the
// callers enforce the enumeration_max_dim guard.
template <class F>
void for_each_nonzero_codeword(const linear_code& c, F&& f) {
    std::size_t k = c.k();
    if (k == 0) return;
    bit_vector w(c.n());
    std::uint64_t total = std::uint64_t(1) << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        w ^= c.generator().row(std::size_t(std::countr_zero(i)));
        f(w);
    }
}

linear_code dual(const linear_code& c);
bool is_self_dual(const linear_code& c);
bool is_self_orthogonal(const linear_code& c);

// All codeword weights divisible by four. Decided on the generator rows:
// every row weight = 0 mod 4 and every pairwise intersection even, which
// is equivalent to the definitional property.
bool is_doubly_even(const linear_code& c);

// d(C) by full enumeration of the 2^k - 1 nonzero codewords. k <= 28.
std::size_t min_distance_bruteforce(const linear_code& c);

// Exact d(C) by information-set enumeration (multiple disjoint-as-possible
// systematic generator matrices, codewords visited in increasing information
// weight, with the standard lower-bound cutoff). No dimension guard.
std::size_t min_distance(const linear_code& c);

// A_0 .. A_n, exact counts by full enumeration. k <= 28.
std::vector<std::uint64_t> weight_enumerator(const linear_code& c);

// Shadow of a self-dual code: the affine solution set of
// v . x = wt(v)/2 (mod 2) over the generators v, returned as a coset
// representative plus its linear part (which is the code itself).
struct shadow_coset {
    bit_vector representative;
    linear_code linear_part;
};
shadow_coset shadow(const linear_code& c);

// Upper bound 4*floor(n/24) + 4 on d of a self-dual code of even length n,
// with the bound 4*floor(n/24) + 6 in the exceptional case n = 22 mod 24.
std::size_t extremal_bound(std::size_t n);

// Self-dual code meeting the bound above.
bool is_extremal(const linear_code& c);

linear_code direct_sum(const linear_code& a, const linear_code& b);

// Deterministic test fixtures:
//   repetition_<n>        [n,1] repetition code
//   i2^<m>                direct sum of m copies of repetition_2
//   c4                    the [4,2,2] code {0000,1010,0101,1111}
//   extended_hamming_8    [8,4,4], first-order Reed-Muller form
//   golay_24              [24,12,8], extended quadratic residue at prime 23
//   double_circulant_36   [36,18,8], pure double circulant
linear_code construct(std::string_view fixture);

}  // namespace sdc

#endif
