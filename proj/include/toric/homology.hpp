#pragma once

#include "toric/betti_table.hpp"
#include "toric/simplicial_complex.hpp"

namespace toric {

/// Reduced integral simplicial homology via Smith normal forms of the
/// boundary matrices. The complex {∅} has H̃_{−1} = Z; ghost vertices carry
/// no chains. Degrees run from −1 to dim K.
BettiTable reduced_homology(const SimplicialComplex& K);

/// Hard cap on the Hochster subset enumeration (2^m subcomplexes).
inline constexpr int kDefaultHochsterVertexCap = 14;

/// Betti numbers of the moment-angle complex Z(K;(D²,S¹)):
/// b_k = Σ_{S⊆[m]} rank H̃_{k−|S|−1}(K_S). Exhaustive over all 2^m subsets;
/// complexes beyond `max_vertices` are a resource error. Runs the subset
/// terms in parallel when OpenMP is enabled.
BettiTable hochster_betti(const SimplicialComplex& K, int max_vertices = kDefaultHochsterVertexCap);

/// Reference implementation: same sum, plain serial loop.
BettiTable hochster_betti_serial(const SimplicialComplex& K,
                                 int max_vertices = kDefaultHochsterVertexCap);

}  // namespace toric
