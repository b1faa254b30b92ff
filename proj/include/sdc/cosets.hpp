#ifndef SDC_COSETS_HPP
#define SDC_COSETS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sdc/code.hpp"

namespace sdc {

// Flat bit-set over all 2^(n-k) syndromes of a code, marking those reached
// by some vector of weight <= threshold. Equivalently: the cosets whose
// leader weight is <= threshold.
class syndrome_table {
public:
    syndrome_table(const linear_code& c);

    std::size_t redundancy() const { return r_; }
    std::size_t threshold() const { return threshold_; }
    std::uint64_t covered_count() const { return covered_count_; }
    std::uint64_t total() const { return std::uint64_t(1) << r_; }
    bool is_covered(std::uint64_t syndrome) const {
        return (bits_[syndrome >> 6] >> (syndrome & 63)) & 1u;
    }
    bool fully_covered() const { return covered_count_ == total(); }

    // raise the threshold to w, marking the syndromes of all supports of
    // the intermediate weights
    void extend(std::size_t w);

    // smallest uncovered syndrome; total() when fully covered
    std::uint64_t first_uncovered() const;

    // column syndromes of the parity-check matrix, as integers
    const std::vector<std::uint64_t>& column_syndromes() const { return col_; }
    const std::vector<std::size_t>& check_pivots() const { return pivots_; }

private:
    void mark(std::uint64_t s) {
        std::uint64_t m = std::uint64_t(1) << (s & 63);
        if (!(bits_[s >> 6] & m)) {
            bits_[s >> 6] |= m;
            ++covered_count_;
        }
    }

    std::size_t n_, r_;
    std::size_t threshold_;
    std::uint64_t covered_count_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint64_t> col_;
    std::vector<std::size_t> pivots_;
};

// memory guard: redundancy above this throws rather than allocating
inline constexpr std::size_t syndrome_table_max_redundancy = 26;

// Table of all syndromes reached by vectors of weight <= w.
syndrome_table syndrome_coverage(const linear_code& c, std::size_t w);

// Decides whether some dimension-(k+1) overcode C + <v> has minimum
// distance >= d, i.e. whether some coset of C has leader weight >= d.
// This settles the question for every proper overcode at once: any
// overcode contains a dimension-(k+1) one, and enlarging a code can only
// lower its distance. Requires a self-orthogonal input; the reported
// distance of the witness overcode is min(d, d(C)).
struct overcode_witness {
    bit_vector representative;   // v with C + <v> of distance >= min(d, d(C))
    std::size_t distance;        // min(d, d(C))
};

std::optional<overcode_witness> has_overcode_with_distance(const linear_code& c, std::size_t d);

// max over cosets of the coset-leader weight
std::size_t covering_radius(const linear_code& c);

}  // namespace sdc

#endif
