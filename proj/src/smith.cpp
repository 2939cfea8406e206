#include "toric/smith.hpp"

#include <algorithm>
#include <cstdlib>

#include "toric/errors.hpp"

namespace toric {

std::vector<std::int64_t> SNFResult::diagonal() const {
    std::vector<std::int64_t> d;
    for (int i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D.at(i, i));
    return d;
}

int SNFResult::rank() const {
    int r = 0;
    for (std::int64_t d : diagonal())
        if (d != 0) ++r;
    return r;
}

SNFResult smith_normal_form(const IntMatrix& A) {
    SNFResult res{IntMatrix::identity(A.rows()), A, IntMatrix::identity(A.cols())};
    IntMatrix& D = res.D;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;
    int r = D.rows(), c = D.cols();

    for (int t = 0; t < std::min(r, c); ++t) {
        while (true) {
            // Smallest-magnitude nonzero pivot, ties by lowest (row, col).
            int pi = -1, pj = -1;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    std::int64_t v = D.at(i, j);
                    if (v == 0) continue;
                    if (pi < 0 || std::llabs(v) < std::llabs(D.at(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) goto done;
            if (pi != t) {
                D.swap_rows(t, pi);
                U.swap_rows(t, pi);
            }
            if (pj != t) {
                D.swap_cols(t, pj);
                V.swap_cols(t, pj);
            }

            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (D.at(i, t) == 0) continue;
                std::int64_t q = D.at(i, t) / D.at(t, t);
                D.add_row_multiple(i, t, checked_neg(q));
                U.add_row_multiple(i, t, checked_neg(q));
                if (D.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                if (D.at(t, j) == 0) continue;
                std::int64_t q = D.at(t, j) / D.at(t, t);
                D.add_col_multiple(j, t, checked_neg(q));
                V.add_col_multiple(j, t, checked_neg(q));
                if (D.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the remaining submatrix for the chain d_1|d_2|….
            bool divisible = true;
            for (int i = t + 1; i < r && divisible; ++i)
                for (int j = t + 1; j < c && divisible; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        D.add_row_multiple(t, i, 1);
                        U.add_row_multiple(t, i, 1);
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (D.at(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
done:
    return res;
}

Lattice Lattice::from_basis(int ambient, std::vector<std::vector<std::int64_t>> basis) {
    if (ambient < 0) throw InputError("ambient dimension must be nonnegative");
    IntMatrix m(ambient, static_cast<int>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (static_cast<int>(basis[j].size()) != ambient)
            throw InputError("basis vector has wrong ambient dimension");
        for (int i = 0; i < ambient; ++i) m.at(i, static_cast<int>(j)) = basis[j][i];
    }
    if (smith_normal_form(m).rank() != static_cast<int>(basis.size()))
        throw InputError("lattice basis vectors are not linearly independent");
    return Lattice{ambient, std::move(basis)};
}

Lattice kernel_basis(const IntMatrix& A) {
    SNFResult snf = smith_normal_form(A);
    int rank = snf.rank();
    std::vector<std::vector<std::int64_t>> basis;
    for (int j = rank; j < A.cols(); ++j) basis.push_back(snf.V.col(j));
    return Lattice{A.cols(), std::move(basis)};
}

bool spans_direct_summand(const IntMatrix& A_sub) {
    if (A_sub.cols() > A_sub.rows())
        throw InputError("spans_direct_summand requires at most as many columns as rows");
    std::vector<std::int64_t> d = smith_normal_form(A_sub).diagonal();
    if (static_cast<int>(d.size()) < A_sub.cols()) return false;
    for (int i = 0; i < A_sub.cols(); ++i)
        if (d[i] != 1) return false;
    return true;
}

std::string to_string(Membership m) {
    switch (m) {
        case Membership::InZSpan: return "in_z_span";
        case Membership::InQSpanOnly: return "in_q_span_only";
        case Membership::Outside: return "outside";
    }
    return "outside";
}

Membership lattice_membership(const Lattice& L, const std::vector<std::int64_t>& v) {
    if (static_cast<int>(v.size()) != L.ambient)
        throw InputError("vector dimension does not match the lattice ambient dimension");
    IntMatrix B(L.ambient, L.rank());
    for (int j = 0; j < L.rank(); ++j)
        for (int i = 0; i < L.ambient; ++i) B.at(i, j) = L.basis[j][i];
    SNFResult snf = smith_normal_form(B);
    int rank = snf.rank();

    // U·B·V = D, so B·x = v has a solution iff y = U·v is supported on the
    // pivot rows; integrality needs d_i | y_i.
    std::vector<std::int64_t> y(L.ambient, 0);
    for (int i = 0; i < L.ambient; ++i)
        for (int k = 0; k < L.ambient; ++k)
            y[i] = checked_add(y[i], checked_mul(snf.U.at(i, k), v[k]));

    for (int i = rank; i < L.ambient; ++i)
        if (y[i] != 0) return Membership::Outside;
    for (int i = 0; i < rank; ++i)
        if (y[i] % snf.D.at(i, i) != 0) return Membership::InQSpanOnly;
    return Membership::InZSpan;
}

}  // namespace toric
