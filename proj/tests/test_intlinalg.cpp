#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "toric/errors.hpp"
#include "toric/int_matrix.hpp"
#include "toric/smith.hpp"

using namespace toric;

namespace {

void check_snf_contract(const IntMatrix& A) {
    SNFResult snf = smith_normal_form(A);
    CHECK(snf.U.multiplied_by(A).multiplied_by(snf.V) == snf.D);
    CHECK(std::abs(oracles::bareiss_det(snf.U)) == 1);
    CHECK(std::abs(oracles::bareiss_det(snf.V)) == 1);

    auto diag = snf.diagonal();
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (diag[i] == 0) CHECK(diag[i + 1] == 0);
        if (diag[i] > 0) CHECK(diag[i + 1] % diag[i] == 0);
    }
    // Off-diagonal entries are zero.
    for (int i = 0; i < snf.D.rows(); ++i)
        for (int j = 0; j < snf.D.cols(); ++j)
            if (i != j) CHECK(snf.D.at(i, j) == 0);

    CHECK(snf.rank() == oracles::bareiss_rank(A));
}

void check_kernel_contract(const IntMatrix& A) {
    Lattice ker = kernel_basis(A);
    CHECK(ker.ambient == A.cols());
    CHECK(ker.rank() == A.cols() - smith_normal_form(A).rank());
    for (const auto& v : ker.basis)
        for (int i = 0; i < A.rows(); ++i) {
            std::int64_t dot = 0;
            for (int j = 0; j < A.cols(); ++j) dot += A.at(i, j) * v[j];
            CHECK(dot == 0);
        }
    // Saturation: the SNF diagonal of the basis matrix is all ones.
    IntMatrix B(ker.ambient, ker.rank());
    for (int j = 0; j < ker.rank(); ++j)
        for (int i = 0; i < ker.ambient; ++i) B.at(i, j) = ker.basis[j][i];
    for (std::int64_t d : smith_normal_form(B).diagonal()) CHECK(d == 1);
}

}  // namespace

TEST_CASE("smith normal form, frozen examples") {
    // Hand elimination: d_1 = gcd(2,3) = 1, d_2 = 6.
    SNFResult snf = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    CHECK(snf.diagonal() == std::vector<std::int64_t>{1, 6});

    CHECK(smith_normal_form(IntMatrix::identity(3)).diagonal() ==
          std::vector<std::int64_t>{1, 1, 1});

    CHECK(smith_normal_form(IntMatrix::from_rows({{1, -1}})).diagonal() ==
          std::vector<std::int64_t>{1});
    CHECK(smith_normal_form(IntMatrix::from_rows({{1, -1}})).rank() == 1);

    check_snf_contract(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    check_snf_contract(IntMatrix::from_rows({{1, -1}}));
}

TEST_CASE("smith normal form is deterministic") {
    IntMatrix A = IntMatrix::from_rows({{4, -2, 6}, {2, 8, -4}, {0, 6, 10}});
    SNFResult first = smith_normal_form(A);
    SNFResult second = smith_normal_form(A);
    CHECK(first.U == second.U);
    CHECK(first.D == second.D);
    CHECK(first.V == second.V);
}

TEST_CASE("kernel bases") {
    Lattice k1 = kernel_basis(IntMatrix::from_rows({{1, -1}}));
    CHECK(k1.basis == std::vector<std::vector<std::int64_t>>{{1, 1}});

    Lattice k2 = kernel_basis(IntMatrix::from_rows({{1, 0, -1}, {0, 1, -1}}));
    REQUIRE(k2.rank() == 1);
    std::vector<std::int64_t> v = k2.basis[0];
    if (v[0] < 0)
        for (auto& x : v) x = -x;
    CHECK(v == std::vector<std::int64_t>{1, 1, 1});

    Lattice k3 = kernel_basis(IntMatrix(2, 3));
    CHECK(k3.rank() == 3);
    check_kernel_contract(IntMatrix(2, 3));
}

TEST_CASE("spans_direct_summand") {
    CHECK(spans_direct_summand(IntMatrix::from_rows({{1, -1}, {0, -1}})));
    CHECK_FALSE(spans_direct_summand(IntMatrix::from_rows({{2}, {0}})));
    for (int k = -4; k <= 4; ++k)
        CHECK(spans_direct_summand(IntMatrix::from_rows({{1}, {k}})));
    CHECK_THROWS_AS(spans_direct_summand(IntMatrix::from_rows({{1, 2, 3}})), InputError);
}

TEST_CASE("spans_direct_summand agrees with the maximal-minor gcd, brute force") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + trial % 5;
        int l = 1 + static_cast<int>(rng() % n);
        IntMatrix A = oracles::random_matrix(rng, n, l, 3);

        // gcd of all l×l minors, computed straight from the definition.
        std::vector<int> cols(l);
        for (int i = 0; i < l; ++i) cols[i] = i;
        long long g = 0;
        std::vector<int> rows(l, 0);
        std::function<void(int, int)> choose = [&](int start, int depth) {
            if (depth == l) {
                g = std::gcd(g, oracles::bareiss_det([&] {
                    IntMatrix sub(l, l);
                    for (int i = 0; i < l; ++i)
                        for (int j = 0; j < l; ++j) sub.at(i, j) = A.at(rows[i], j);
                    return sub;
                }()));
                return;
            }
            for (int r = start; r < n; ++r) {
                rows[depth] = r;
                choose(r + 1, depth + 1);
            }
        };
        choose(0, 0);
        CHECK(spans_direct_summand(A) == (g == 1));
    }
}

TEST_CASE("minor_det") {
    IntMatrix cp2 = IntMatrix::from_rows({{1, 0, -1}, {0, 1, -1}});
    CHECK(minor_det(cp2, {0, 1}, {0, 1}) == 1);
    CHECK(minor_det(cp2, {0, 1}, {0, 2}) == -1);
    CHECK(minor_det(cp2, {0, 1}, {1, 2}) == 1);

    CHECK(minor_det(cp2, {}, {}) == 1);
    CHECK(minor_det(IntMatrix::from_rows({{3, 0}, {0, 5}}), {0, 1}, {0, 1}) == 15);

    CHECK_THROWS_AS(minor_det(cp2, {0}, {5}), InputError);
    CHECK_THROWS_AS(minor_det(cp2, {0, 1}, {2}), InputError);
    CHECK_THROWS_AS(minor_det(cp2, {0, 0}, {1, 2}), InputError);
}

TEST_CASE("minor_det agrees with Bareiss oracle on random squares") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        int k = 1 + trial % 5;
        IntMatrix A = oracles::random_matrix(rng, k, k, 5);
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        CHECK(minor_det(A, idx, idx) == oracles::bareiss_det(A));
    }
}

TEST_CASE("lattice membership") {
    Lattice L = Lattice::from_basis(3, {{1, 0, 0}, {0, 1, 1}});
    CHECK(lattice_membership(L, {1, 1, 1}) == Membership::InZSpan);

    Lattice half = Lattice::from_basis(2, {{2, 0}});
    CHECK(lattice_membership(half, {1, 0}) == Membership::InQSpanOnly);

    Lattice axis = Lattice::from_basis(2, {{1, 0}});
    CHECK(lattice_membership(axis, {0, 1}) == Membership::Outside);

    CHECK(lattice_membership(axis, {0, 0}) == Membership::InZSpan);
    CHECK_THROWS_AS(lattice_membership(axis, {1, 2, 3}), InputError);
    CHECK_THROWS_AS(Lattice::from_basis(2, {{1, 1}, {2, 2}}), InputError);
}

TEST_CASE("overflow is detected, not wrapped") {
    std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(checked_add(big, big), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 4), OverflowError);
    CHECK_THROWS_AS(
        minor_det(IntMatrix::from_rows({{big, big}, {big, -big}}), {0, 1}, {0, 1}),
        OverflowError);
}

TEST_CASE("random linear algebra contract sweep") {
    std::mt19937 rng(161803);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 1 + static_cast<int>(rng() % 6);
        int c = 1 + static_cast<int>(rng() % 6);
        IntMatrix A = oracles::random_matrix(rng, r, c, 5);
        check_snf_contract(A);
        check_kernel_contract(A);
    }
    // Degenerate shapes.
    check_snf_contract(IntMatrix(3, 3));
    check_snf_contract(IntMatrix(1, 6));
    check_kernel_contract(IntMatrix(4, 1));
}
