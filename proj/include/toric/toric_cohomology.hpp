#pragma once

#include <cstdint>
#include <vector>

#include "toric/betti_table.hpp"
#include "toric/characteristic.hpp"
#include "toric/simplicial_complex.hpp"

namespace toric {

/// Even Betti numbers b_{2i} = h_i of the toric manifold over K, odd ones
/// zero. Requires K pure of dimension n−1; the h-vector reading assumes K is
/// a polytopal nerve carrying a regular characteristic matrix, which is the
/// caller's responsibility.
BettiTable toric_betti(const SimplicialComplex& K, int n);

/// Cohomology-ring presentation: one degree-2 generator per vertex,
/// Stanley–Reisner monomials from the minimal non-faces, and one linear form
/// per matrix row. Emitted symbolically; no normal form is computed.
struct RingPresentation {
    std::vector<Label> generators;
    std::vector<std::vector<Label>> monomial_relations;
    std::vector<std::vector<std::int64_t>> linear_relations;

    bool operator==(const RingPresentation&) const = default;
};

RingPresentation cohomology_presentation(const SimplicialComplex& K,
                                         const CharacteristicMatrix& lambda);

}  // namespace toric
