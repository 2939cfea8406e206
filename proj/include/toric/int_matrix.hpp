#pragma once

#include <cstdint>
#include <vector>

namespace toric {

// Exact arithmetic on native 64-bit integers. Overflow is detected and
// reported, never wrapped.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::int64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    IntMatrix multiplied_by(const IntMatrix& other) const;

    // Elementary operations, all overflow-checked.
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, std::int64_t q);  // row dst += q * row src
    void add_col_multiple(int dst, int src, std::int64_t q);
    void negate_row(int i);

    std::vector<std::int64_t> col(int j) const;

    bool operator==(const IntMatrix& other) const = default;

private:
    int rows_, cols_;
    std::vector<std::int64_t> a_;
};

/// Exact determinant of the square submatrix indexed by `rows` × `cols`
/// (0-based, distinct, equal counts). The empty minor is 1.
std::int64_t minor_det(const IntMatrix& A, const std::vector<int>& rows,
                       const std::vector<int>& cols);

}  // namespace toric
