#include "sdc/code.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

namespace sdc {

linear_code linear_code::from_generators(const std::vector<bit_vector>& rows) {
    if (rows.empty())
        throw std::invalid_argument("linear_code::from_generators: no rows (use zero(n))");
    return from_matrix(bit_matrix::from_rows(rows));
}

linear_code linear_code::from_matrix(const bit_matrix& m) {
    linear_code c;
    c.n_ = m.cols();
    c.gen_ = reduce_rref(m).mat;
    return c;
}

linear_code linear_code::zero(std::size_t n) {
    linear_code c;
    c.n_ = n;
    c.gen_ = bit_matrix(0, n);
    return c;
}

linear_code dual(const linear_code& c) {
    return linear_code::from_matrix(kernel(c.generator()));
}

bool is_self_dual(const linear_code& c) {
    if (c.n() % 2 != 0 || c.k() * 2 != c.n()) return false;
    return c == dual(c);
}

bool is_self_orthogonal(const linear_code& c) {
    const bit_matrix& g = c.generator();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i; j < g.rows(); ++j)
            if (g.row(i).dot(g.row(j))) return false;
    return true;
}

bool is_doubly_even(const linear_code& c) {
    const bit_matrix& g = c.generator();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (g.row(i).weight() % 4 != 0) return false;
        for (std::size_t j = i + 1; j < g.rows(); ++j)
            if (g.row(i).dot(g.row(j))) return false;
    }
    return true;
}

static void check_enum_guard(const linear_code& c, const char* op) {
    if (c.k() > enumeration_max_dim)
        throw std::invalid_argument(std::string(op) + ": dimension " + std::to_string(c.k()) +
                                    " exceeds the enumeration guard k <= " +
                                    std::to_string(enumeration_max_dim));
}

std::size_t min_distance_bruteforce(const linear_code& c) {
    if (c.k() == 0)
        throw std::invalid_argument("min_distance_bruteforce: zero code has no nonzero codeword");
    check_enum_guard(c, "min_distance_bruteforce");
    std::size_t d = c.n() + 1;
    for_each_nonzero_codeword(c, [&](const bit_vector& w) {
        std::size_t wt = w.weight();
        if (wt < d) d = wt;
    });
    return d;
}

namespace {

// One generator matrix of the information-set sequence: all k rows of the
// code reduced so that `fresh` pivots fall on columns unused by earlier
// matrices in the sequence.
struct infoset_matrix {
    std::vector<bit_vector> rows;
    std::size_t fresh;  // pivots on previously unused columns
};

std::vector<infoset_matrix> infoset_sequence(const bit_matrix& gen) {
    std::size_t k = gen.rows(), n = gen.cols();
    std::vector<bool> used(n, false);
    std::vector<infoset_matrix> seq;
    for (;;) {
        std::vector<bit_vector> rows = gen.row_data();
        std::size_t r = 0;
        for (std::size_t col = 0; col < n && r < k; ++col) {
            if (used[col]) continue;
            std::size_t j = r;
            while (j < k && !rows[j][col]) ++j;
            if (j == k) continue;
            std::swap(rows[r], rows[j]);
            for (std::size_t i = 0; i < k; ++i)
                if (i != r && rows[i][col]) rows[i] ^= rows[r];
            used[col] = true;
            ++r;
        }
        if (r == 0) break;
        seq.push_back({std::move(rows), r});
    }
    return seq;
}

// minimum weight over all sums of exactly w rows
void enum_info_weight(const std::vector<bit_vector>& rows, std::size_t w, std::size_t first,
                      bit_vector& acc, std::size_t& best) {
    for (std::size_t j = first; j + (w - 1) < rows.size(); ++j) {
        acc ^= rows[j];
        if (w == 1) {
            std::size_t wt = acc.weight();
            if (wt < best) best = wt;
        } else {
            enum_info_weight(rows, w - 1, j + 1, acc, best);
        }
        acc ^= rows[j];
    }
}

}  // namespace

std::size_t min_distance(const linear_code& c) {
    std::size_t k = c.k(), n = c.n();
    if (k == 0) throw std::invalid_argument("min_distance: zero code has no nonzero codeword");

    std::vector<infoset_matrix> seq = infoset_sequence(c.generator());
    std::size_t best = n + 1;
    for (std::size_t w = 1; w <= k; ++w) {
        for (const infoset_matrix& m : seq) {
            bit_vector acc(n);
            enum_info_weight(m.rows, w, 0, acc, best);
        }
        // any codeword not yet visited has information weight > w on every
        // information set of the sequence
        std::size_t lb = 0;
        for (const infoset_matrix& m : seq) {
            std::size_t slack = k - m.fresh;
            if (w + 1 > slack) lb += w + 1 - slack;
        }
        if (lb >= best) break;
    }
    return best;
}

std::vector<std::uint64_t> weight_enumerator(const linear_code& c) {
    check_enum_guard(c, "weight_enumerator");
    std::vector<std::uint64_t> a(c.n() + 1, 0);
    a[0] = 1;
    for_each_nonzero_codeword(c, [&](const bit_vector& w) { ++a[w.weight()]; });
    return a;
}

shadow_coset shadow(const linear_code& c) {
    if (!is_self_dual(c)) throw std::invalid_argument("shadow: code is not self-dual");
    // Solve gen . x = b with b_i = wt(row_i)/2 mod 2. With the generator in
    // RREF a solution is supported on the pivot columns alone; the solution
    // set is that representative plus the dual (= the code itself).
    const bit_matrix& g = c.generator();
    bit_vector rep(c.n());
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if ((g.row(i).weight() / 2) & 1u) rep.set(g.row(i).first_set(), true);
    }
    return {std::move(rep), c};
}

std::size_t extremal_bound(std::size_t n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("extremal_bound: length must be even and >= 2");
    if (n % 24 == 22) return 4 * (n / 24) + 6;
    return 4 * (n / 24) + 4;
}

bool is_extremal(const linear_code& c) {
    if (!is_self_dual(c)) throw std::invalid_argument("is_extremal: code is not self-dual");
    return min_distance(c) == extremal_bound(c.n());
}

linear_code direct_sum(const linear_code& a, const linear_code& b) {
    std::size_t n = a.n() + b.n();
    bit_matrix m(a.k() + b.k(), n);
    for (std::size_t i = 0; i < a.k(); ++i)
        for (std::size_t j : a.generator().row(i).support()) m.set(i, j, true);
    for (std::size_t i = 0; i < b.k(); ++i)
        for (std::size_t j : b.generator().row(i).support()) m.set(a.k() + i, a.n() + j, true);
    return linear_code::from_matrix(m);
}

namespace {

linear_code repetition(std::size_t n) {
    if (n == 0) throw std::invalid_argument("construct: repetition length must be positive");
    bit_vector row(n);
    for (std::size_t i = 0; i < n; ++i) row.set(i, true);
    return linear_code::from_generators({row});
}

linear_code i2_power(std::size_t m) {
    if (m == 0) throw std::invalid_argument("construct: i2 exponent must be positive");
    linear_code c = repetition(2);
    linear_code acc = c;
    for (std::size_t i = 1; i < m; ++i) acc = direct_sum(acc, c);
    return acc;
}

linear_code extended_hamming_8() {
    return linear_code::from_matrix(bit_matrix::from_strings({
        "11111111",
        "01010101",
        "00110011",
        "00001111",
    }));
}

// Extended quadratic residue construction at p = 23: the cyclic shifts of
// the residue indicator polynomial span the [23,12] quadratic residue code
// (the binary Golay code); an overall parity coordinate extends it to
// [24,12,8].
linear_code golay_24() {
    const std::size_t p = 23;
    std::vector<bool> qr(p, false);
    for (std::size_t j = 1; j < p; ++j) qr[(j * j) % p] = true;

    std::vector<bit_vector> rows;
    for (std::size_t shift = 0; shift < p; ++shift) {
        bit_vector row(p + 1);
        for (std::size_t r = 0; r < p; ++r)
            if (qr[r]) row.set((r + shift) % p, true);
        if (row.weight() % 2 != 0) row.set(p, true);
        rows.push_back(std::move(row));
    }
    return linear_code::from_generators(rows);
}

// Bordered double circulant [36,18,8] self-dual code: G = [I_18 | B] with
// B = (0 1..1 / 1..1 C) for the 17x17 circulant C whose first row has
// support {0,1,2,3,5,7,8,9}. Found by exhaustive search over the bordered
// circulant family; B B^T = I and the absence of words of weight < 8 are
// re-checked by the test suite.
linear_code double_circulant_36() {
    const std::size_t h = 18;
    const std::uint32_t first = 0x3af;  // circulant first row, bit i = coefficient i

    bit_matrix m(h, 2 * h);
    for (std::size_t i = 0; i < h; ++i) m.set(i, i, true);
    for (std::size_t j = 1; j < h; ++j) m.set(0, h + j, true);  // border row: 0 | 1^17
    for (std::size_t i = 1; i < h; ++i) {
        m.set(i, h, true);  // border column
        for (std::size_t j = 0; j < 17; ++j)
            if ((first >> j) & 1u) m.set(i, h + 1 + (j + (i - 1)) % 17, true);
    }
    return linear_code::from_matrix(m);
}

}  // namespace

linear_code construct(std::string_view fixture) {
    if (fixture == "c4")
        return linear_code::from_matrix(bit_matrix::from_strings({"1010", "0101"}));
    if (fixture == "extended_hamming_8") return extended_hamming_8();
    if (fixture == "golay_24") return golay_24();
    if (fixture == "double_circulant_36") return double_circulant_36();

    auto parse_suffix = [&](std::string_view prefix, std::size_t& out) {
        if (fixture.size() <= prefix.size() || fixture.substr(0, prefix.size()) != prefix)
            return false;
        std::string_view num = fixture.substr(prefix.size());
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), out);
        return ec == std::errc() && ptr == num.data() + num.size();
    };

    std::size_t v = 0;
    if (parse_suffix("repetition_", v)) return repetition(v);
    if (parse_suffix("i2^", v)) return i2_power(v);

    throw std::invalid_argument("construct: unknown fixture '" + std::string(fixture) + "'");
}

}  // namespace sdc
