#pragma once

#include <vector>

#include "toric/simplicial_complex.hpp"

namespace toric {

/// Sequence of positive integers (j_1,…,j_m) with d(J) = Σ j_i.
class JSequence {
public:
    explicit JSequence(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    long long d() const { return d_; }

    bool operator==(const JSequence& other) const = default;

private:
    std::vector<int> entries_;
    long long d_;
};

/// How (m, n, m−n) transforms under the wedge and composed constructions.
struct ParamTransform {
    long long m_before, n_before, coker_before;
    long long d_after, n_after, coker_after;

    bool operator==(const ParamTransform&) const = default;
};

/// Canonical vertex label of block i, inner slot `inner`: "<base>.<inner>".
/// Shared by the constructions and the characteristic-matrix builders so that
/// complexes and matrix columns match by label.
Label block_vertex_label(const Label& base, const Label& inner);

/// Simplicial wedge K(J): the complex on d(J) vertices (i,k), k = 1..j_i,
/// whose minimal non-faces are exactly the block blow-ups of the minimal
/// non-faces of K. Requires |J| = |vertices(K)|.
SimplicialComplex simplicial_wedge(const SimplicialComplex& K, const JSequence& J);

/// Composed complex K(K_1,…,K_m): the union over faces σ of K of the joins
/// taking the full simplex on blocks in σ and K_i elsewhere, on vertices
/// (i, w) for w a vertex of K_i. Requires one part per vertex of K.
SimplicialComplex composed_complex(const SimplicialComplex& K,
                                   const std::vector<SimplicialComplex>& parts);

/// (m, n, m−n) ↦ (d(J), d(J)−m+n, m−n).
ParamTransform parameter_transform_wedge(int m, int n, const JSequence& J);

/// (m, n, m−n) ↦ (d(J), n+N, d(J)−n−N) with N = Σ n_i.
ParamTransform parameter_transform_composed(int m, int n, const JSequence& J, long long N);

}  // namespace toric
