#ifndef SDC_BITMAT_HPP
#define SDC_BITMAT_HPP

#include <cstddef>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "sdc/bitvec.hpp"

namespace sdc {

// Row-major matrix over GF(2): a list of equal-length bit_vectors.
// The canonical form used throughout is the reduced row echelon form
// with zero rows removed, so equality of row spaces is plain equality
// of reduced matrices.
class bit_matrix {
public:
    bit_matrix() = default;
    bit_matrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, bit_vector(cols)) {}

    static bit_matrix from_rows(std::vector<bit_vector> rows);
    static bit_matrix from_strings(std::initializer_list<std::string_view> rows);
    static bit_matrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    const bit_vector& row(std::size_t i) const { return rows_[i]; }
    bit_vector& row(std::size_t i) { return rows_[i]; }
    const std::vector<bit_vector>& row_data() const { return rows_; }

    void append_row(bit_vector v);

    bool get(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    void set(std::size_t i, std::size_t j, bool b) { rows_[i].set(j, b); }

    bit_matrix transposed() const;

    // matrix * column vector, v of length cols(); result length rows()
    bit_vector mul(const bit_vector& v) const;

    friend bool operator==(const bit_matrix& a, const bit_matrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const bit_matrix& a, const bit_matrix& b) { return !(a == b); }

private:
    std::size_t cols_ = 0;
    std::vector<bit_vector> rows_;
};

struct rref_result {
    bit_matrix mat;                   // RREF, zero rows removed
    std::vector<std::size_t> pivots;  // strictly increasing, one per row
};

// Unique reduced row echelon form of the row space of m.
rref_result reduce_rref(const bit_matrix& m);

std::size_t rank(const bit_matrix& m);

// Basis of { v : m * v^T = 0 }, one row per free column of m.
// Row count is cols(m) - rank(m). Rows are not themselves in RREF.
bit_matrix kernel(const bit_matrix& m);

// Membership of v in the row space of m. Precondition: m is in reduced
// row echelon form (as produced by reduce_rref); pivots are recovered
// from the leading set bit of each row.
bool contains(const bit_matrix& rref_m, const bit_vector& v);

}  // namespace sdc

#endif
