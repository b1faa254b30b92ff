#include "sdc/bitmat.hpp"

#include <stdexcept>

namespace sdc {

bit_matrix bit_matrix::from_rows(std::vector<bit_vector> rows) {
    if (rows.empty())
        throw std::invalid_argument("bit_matrix::from_rows: no rows (use bit_matrix(0, n))");
    bit_matrix m;
    m.cols_ = rows.front().size();
    for (const bit_vector& r : rows)
        if (r.size() != m.cols_)
            throw std::invalid_argument("bit_matrix::from_rows: ragged rows");
    m.rows_ = std::move(rows);
    return m;
}

bit_matrix bit_matrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<bit_vector> v;
    v.reserve(rows.size());
    for (std::string_view s : rows) v.push_back(bit_vector::from_string(s));
    return from_rows(std::move(v));
}

bit_matrix bit_matrix::identity(std::size_t n) {
    bit_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void bit_matrix::append_row(bit_vector v) {
    if (rows_.empty() && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("bit_matrix::append_row: length mismatch");
    rows_.push_back(std::move(v));
}

bit_matrix bit_matrix::transposed() const {
    bit_matrix t(cols_, rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j : rows_[i].support()) t.set(j, i, true);
    return t;
}

bit_vector bit_matrix::mul(const bit_vector& v) const {
    bit_vector r(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].dot(v)) r.flip(i);
    return r;
}

rref_result reduce_rref(const bit_matrix& m) {
    std::vector<bit_vector> rows = m.row_data();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < rows.size(); ++col) {
        std::size_t j = r;
        while (j < rows.size() && !rows[j][col]) ++j;
        if (j == rows.size()) continue;
        std::swap(rows[r], rows[j]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][col]) rows[i] ^= rows[r];
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r, bit_vector(m.cols()));
    rref_result res;
    res.mat = r ? bit_matrix::from_rows(std::move(rows)) : bit_matrix(0, m.cols());
    res.pivots = std::move(pivots);
    return res;
}

std::size_t rank(const bit_matrix& m) { return reduce_rref(m).mat.rows(); }

bit_matrix kernel(const bit_matrix& m) {
    rref_result r = reduce_rref(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    bit_matrix k(0, n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        bit_vector v(n);
        v.set(f, true);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            if (r.mat.row(i)[f]) v.set(r.pivots[i], true);
        k.append_row(std::move(v));
    }
    return k;
}

bool contains(const bit_matrix& rref_m, const bit_vector& v) {
    if (v.size() != rref_m.cols())
        throw std::invalid_argument("contains: length mismatch");
    bit_vector w = v;
    for (std::size_t i = 0; i < rref_m.rows(); ++i) {
        std::size_t p = rref_m.row(i).first_set();
        if (p < w.size() && w[p]) w ^= rref_m.row(i);
    }
    return w.zero();
}

}  // namespace sdc
