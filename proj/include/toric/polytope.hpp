#pragma once

#include <vector>

#include "toric/simplicial_complex.hpp"

namespace toric {

/// Facet–vertex incidence of a simple polytope, given purely combinatorially:
/// each polytope vertex is the set of exactly n facets meeting there.
class SimplePolytopeCombinatorics {
public:
    SimplePolytopeCombinatorics(int dimension, std::vector<Label> facet_labels,
                                std::vector<std::vector<Label>> polytope_vertices);

    int dimension() const { return dimension_; }
    const std::vector<Label>& facet_labels() const { return facet_labels_; }
    const std::vector<std::vector<Label>>& polytope_vertices() const { return vertices_; }

private:
    int dimension_;
    std::vector<Label> facet_labels_;
    std::vector<std::vector<Label>> vertices_;
};

/// Nerve K_P: one vertex per facet; the facet set of each polytope vertex is a
/// maximal face. Pure of dimension n−1 with one maximal face per polytope
/// vertex.
SimplicialComplex nerve_of_simple_polytope(const SimplePolytopeCombinatorics& P);

}  // namespace toric
