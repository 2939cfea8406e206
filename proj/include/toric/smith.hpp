#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/int_matrix.hpp"

namespace toric {

/// Smith decomposition U·A·V = D with U, V unimodular and the diagonal of D
/// nonnegative with d_1 | d_2 | ….
struct SNFResult {
    IntMatrix U, D, V;

    std::vector<std::int64_t> diagonal() const;
    int rank() const;
};

/// Deterministic Smith normal form: pivots are the smallest-magnitude nonzero
/// entries, ties broken by lowest (row, col).
SNFResult smith_normal_form(const IntMatrix& A);

/// Sublattice of Z^ambient spanned by rationally independent integer vectors.
struct Lattice {
    int ambient = 0;
    std::vector<std::vector<std::int64_t>> basis;

    int rank() const { return static_cast<int>(basis.size()); }

    /// Validates independence of the basis over Q.
    static Lattice from_basis(int ambient, std::vector<std::vector<std::int64_t>> basis);
};

/// Saturated basis of {x : A·x = 0}; the lattice is a direct summand of Z^cols.
Lattice kernel_basis(const IntMatrix& A);

/// True iff the columns of the n×l matrix span an l-dimensional direct
/// summand of Z^n, i.e. the SNF diagonal is l ones.
bool spans_direct_summand(const IntMatrix& A_sub);

enum class Membership { InZSpan, InQSpanOnly, Outside };

std::string to_string(Membership m);

/// Classifies v against the integer span and the rational span of L's basis.
Membership lattice_membership(const Lattice& L, const std::vector<std::int64_t>& v);

}  // namespace toric
