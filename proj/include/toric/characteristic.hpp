#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "toric/constructions.hpp"
#include "toric/int_matrix.hpp"
#include "toric/simplicial_complex.hpp"
#include "toric/smith.hpp"

namespace toric {

/// Integer matrix whose columns are indexed by the vertices of an associated
/// complex. All column selection goes through the labels, never through
/// positional guesses.
struct CharacteristicMatrix {
    IntMatrix matrix;
    std::vector<Label> column_labels;

    static CharacteristicMatrix create(IntMatrix matrix, std::vector<Label> column_labels);

    int rows() const { return matrix.rows(); }
    int cols() const { return matrix.cols(); }

    int column_index(const Label& label) const;

    bool operator==(const CharacteristicMatrix&) const = default;
};

enum class RegularityMode { AllFaces, VerticesOnly };

struct RegularityFailure {
    std::vector<Label> face;
    /// SNF diagonal of the face's column block (AllFaces) or the single vertex
    /// minor (VerticesOnly).
    std::vector<std::int64_t> witness;

    bool operator==(const RegularityFailure&) const = default;
};

struct RegularityReport {
    bool ok = true;
    std::vector<RegularityFailure> failures;

    bool operator==(const RegularityReport&) const = default;
};

/// AllFaces: every nonempty face's columns must span a direct summand of rank
/// equal to the face size. VerticesOnly: every maximal face's n×n minor must
/// be ±1; valid only for K pure of dimension n−1.
RegularityReport check_regularity(const SimplicialComplex& K, const CharacteristicMatrix& lambda,
                                  RegularityMode mode);

/// Reference implementation without the OpenMP face sweep.
RegularityReport check_regularity_serial(const SimplicialComplex& K,
                                         const CharacteristicMatrix& lambda, RegularityMode mode);

/// The (j−1)×j matrix [I_{j−1} | −1] of the diagonal circle action on
/// S^{2j−1}; the 0×1 matrix for j = 1. Columns labeled "1".."j".
CharacteristicMatrix diagonal_sphere_matrix(int j);

/// λ(J): the (d(J)−m+n) × d(J) wedge characteristic matrix. Column layout is
/// doubled columns first (block-major, labels (i,2)..(i,j_i)), then the
/// originals (i,1). Block row i is I_{j_i−1} with −1 in column (i,1); the
/// bottom n rows place λ under the original columns.
CharacteristicMatrix build_lambda_J(const CharacteristicMatrix& lambda, const JSequence& J);

/// λ(J,N): same layout with block i carrying the first j_i−1 columns of part
/// matrix λ_i and its last column under the original position. Part column k
/// keeps the label of the k-th part vertex, so the original position of block
/// i is labeled by the last part vertex.
CharacteristicMatrix build_lambda_JN(const CharacteristicMatrix& lambda,
                                     const std::vector<CharacteristicMatrix>& parts);

/// Row rank and saturated kernel lattice, both via the Smith normal form.
/// Kernel coordinates follow the matrix's column order.
std::pair<int, Lattice> rank_and_kernel(const CharacteristicMatrix& m);

/// Q = ker λ_1 ⊕ … ⊕ ker λ_m inside Z^{d(J)}: each part kernel is embedded by
/// sending part coordinates 1..j_i−1 to the block's doubled columns and
/// coordinate j_i to the original column.
Lattice q_subgroup(const std::vector<CharacteristicMatrix>& parts, const JSequence& J);

enum class Containment { OverZ, OverQ, No };

std::string to_string(Containment c);

/// Classification of every kernel basis vector of λ(J,N) against Q. Reports
/// only; containment is never asserted.
struct KernelInQReport {
    int rank = 0;
    int kernel_rank = 0;
    int q_rank = 0;
    std::vector<std::vector<std::int64_t>> kernel_vectors;
    std::vector<Membership> memberships;
    Containment summary = Containment::OverZ;

    bool operator==(const KernelInQReport&) const = default;
};

KernelInQReport kernel_in_q_report(const CharacteristicMatrix& lambda_jn, const Lattice& Q);

}  // namespace toric
