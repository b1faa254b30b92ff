#include "sdc/cosets.hpp"

#include <stdexcept>
#include <string>

#include "sdc/revdoor.hpp"

namespace sdc {

syndrome_table::syndrome_table(const linear_code& c)
    : n_(c.n()), r_(c.n() - c.k()), threshold_(0), covered_count_(0) {
    if (r_ > syndrome_table_max_redundancy)
        throw std::invalid_argument("syndrome_table: redundancy " + std::to_string(r_) +
                                    " exceeds the memory guard n-k <= " +
                                    std::to_string(syndrome_table_max_redundancy));
    bits_.assign(std::size_t((total() + 63) / 64), 0);

    linear_code d = dual(c);  // parity-check rows in RREF
    pivots_ = reduce_rref(d.generator()).pivots;
    col_.assign(n_, 0);
    for (std::size_t i = 0; i < d.k(); ++i)
        for (std::size_t j : d.generator().row(i).support())
            col_[j] |= std::uint64_t(1) << i;

    mark(0);  // the zero vector
}

void syndrome_table::extend(std::size_t w) {
    for (std::size_t t = threshold_ + 1; t <= w; ++t) {
        if (t > n_) break;
        std::uint64_t s = 0;
        revolving_door(
            n_, t,
            [&](const std::vector<std::size_t>& c) {
                s = 0;
                for (std::size_t j : c) s ^= col_[j];
                mark(s);
            },
            [&](std::size_t out, std::size_t in) {
                s ^= col_[out] ^ col_[in];
                mark(s);
            });
    }
    if (w > threshold_) threshold_ = w;
}

std::uint64_t syndrome_table::first_uncovered() const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        std::uint64_t inv = ~bits_[i];
        if (i + 1 == bits_.size() && (total() & 63))
            inv &= (std::uint64_t(1) << (total() & 63)) - 1;
        if (inv) return (std::uint64_t(i) << 6) + std::uint64_t(std::countr_zero(inv));
    }
    return total();
}

syndrome_table syndrome_coverage(const linear_code& c, std::size_t w) {
    syndrome_table t(c);
    t.extend(w);
    return t;
}

std::optional<overcode_witness> has_overcode_with_distance(const linear_code& c, std::size_t d) {
    if (d == 0) throw std::invalid_argument("has_overcode_with_distance: distance must be >= 1");
    if (!is_self_orthogonal(c))
        throw std::invalid_argument("has_overcode_with_distance: code is not self-orthogonal");

    syndrome_table t = syndrome_coverage(c, d - 1);
    if (t.fully_covered()) return std::nullopt;

    // any vector with an uncovered syndrome heads a coset of leader
    // weight >= d; put it on the check pivots
    std::uint64_t s = t.first_uncovered();
    bit_vector rep(c.n());
    for (std::size_t i = 0; i < t.redundancy(); ++i)
        if ((s >> i) & 1u) rep.set(t.check_pivots()[i], true);

    overcode_witness w;
    w.representative = std::move(rep);
    w.distance = c.k() == 0 ? d : std::min(d, min_distance(c));
    return w;
}

std::size_t covering_radius(const linear_code& c) {
    syndrome_table t(c);
    std::size_t w = 0;
    while (!t.fully_covered()) {
        ++w;
        t.extend(w);
    }
    return w;
}

}  // namespace sdc
