#include "toric/int_matrix.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "toric/errors.hpp"

namespace toric {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    return checked_sub(0, a);
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be nonnegative");
    a_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::multiplied_by(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw InputError("matrix product dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            std::int64_t aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j)
                out.at(i, j) = checked_add(out.at(i, j), checked_mul(aik, other.at(k, j)));
        }
    return out;
}

void IntMatrix::swap_rows(int i, int j) {
    for (int k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j) {
    for (int k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row_multiple(int dst, int src, std::int64_t q) {
    for (int k = 0; k < cols_; ++k)
        at(dst, k) = checked_add(at(dst, k), checked_mul(q, at(src, k)));
}

void IntMatrix::add_col_multiple(int dst, int src, std::int64_t q) {
    for (int k = 0; k < rows_; ++k)
        at(k, dst) = checked_add(at(k, dst), checked_mul(q, at(k, src)));
}

void IntMatrix::negate_row(int i) {
    for (int k = 0; k < cols_; ++k) at(i, k) = checked_neg(at(i, k));
}

std::vector<std::int64_t> IntMatrix::col(int j) const {
    std::vector<std::int64_t> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

std::int64_t minor_det(const IntMatrix& A, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw InputError("minor requires equally many rows and columns");
    auto in_range = [](const std::vector<int>& idx, int bound) {
        std::unordered_set<int> seen;
        for (int i : idx) {
            if (i < 0 || i >= bound) return false;
            if (!seen.insert(i).second) return false;
        }
        return true;
    };
    if (!in_range(rows, A.rows()) || !in_range(cols, A.cols()))
        throw InputError("minor index out of range");

    int k = static_cast<int>(rows.size());
    if (k == 0) return 1;

    IntMatrix m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.at(i, j) = A.at(rows[i], cols[j]);

    // Bareiss fraction-free elimination; every division is exact.
    std::int64_t sign = 1, prev = 1;
    for (int t = 0; t < k - 1; ++t) {
        if (m.at(t, t) == 0) {
            int swap = -1;
            for (int i = t + 1; i < k && swap < 0; ++i)
                if (m.at(i, t) != 0) swap = i;
            if (swap < 0) return 0;
            m.swap_rows(t, swap);
            sign = -sign;
        }
        for (int i = t + 1; i < k; ++i)
            for (int j = t + 1; j < k; ++j) {
                std::int64_t num = checked_sub(checked_mul(m.at(i, j), m.at(t, t)),
                                               checked_mul(m.at(i, t), m.at(t, j)));
                m.at(i, j) = num / prev;
            }
        prev = m.at(t, t);
    }
    return checked_mul(sign, m.at(k - 1, k - 1));
}

}  // namespace toric
