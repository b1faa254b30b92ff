#ifndef SDC_AUTSEARCH_HPP
#define SDC_AUTSEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sdc/code.hpp"
#include "sdc/perm.hpp"

namespace sdc {

// sigma(C) = C, decided on the generator rows (sufficient by linearity)
bool verify_automorphism(const linear_code& c, const permutation& p);

// Induced permutation on the orbits of a fixed-point-free involution g,
// for an h that commutes with g. Orbits are indexed sorted by their
// smallest element (the normalize_involution order).
permutation orbit_quotient_action(const permutation& h, const permutation& g);

// All codewords of weight d(C), sorted lexicographically. k <= 28.
std::vector<bit_vector> min_weight_words(const linear_code& c);

// Per-coordinate invariant preserved by every automorphism: the number of
// minimum-weight words through the coordinate, plus the sorted profile of
// pair incidences with every other coordinate. The induced partition of
// the coordinates refines all automorphism orbits.
struct coordinate_signature {
    std::uint32_t incidence;
    std::vector<std::uint32_t> pair_profile;

    friend bool operator==(const coordinate_signature&, const coordinate_signature&) = default;
    friend auto operator<=>(const coordinate_signature&, const coordinate_signature&) = default;
};

std::vector<coordinate_signature> coordinate_signatures(const linear_code& c);

struct autsearch_stats {
    std::size_t anchor_weight = 0;   // weight class the pruning anchored on
    bool fallback_used = false;      // anchor moved past the minimum weight
    std::uint64_t nodes = 0;         // assignments explored
};

// word-set size above which the search anchors on the next weight class
inline constexpr std::size_t autsearch_word_cap = 1000000;

// Complete backtracking search for an automorphism with the prescribed
// cycle type. Returns a witness (the first one found under the documented
// deterministic branch order) or a definitive "none". k <= 28.
//
// A "none" answer means the tree was exhausted. Worst-case time is
// exponential; codes whose minimum-weight words carry little structure
// (e.g. sums of repetition blocks, whose automorphism group is huge) can
// make negative answers impractically slow.
std::optional<permutation> find_automorphism_with_cycle_type(const linear_code& c,
                                                             const cycle_type& t,
                                                             autsearch_stats* stats = nullptr);

}  // namespace sdc

#endif
