#include "toric/polytope.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "toric/errors.hpp"

namespace toric {

SimplePolytopeCombinatorics::SimplePolytopeCombinatorics(
    int dimension, std::vector<Label> facet_labels, std::vector<std::vector<Label>> polytope_vertices)
    : dimension_(dimension), facet_labels_(std::move(facet_labels)), vertices_(std::move(polytope_vertices)) {
    if (dimension_ < 0) throw InputError("polytope dimension must be nonnegative");
    std::unordered_set<Label> known(facet_labels_.begin(), facet_labels_.end());
    if (known.size() != facet_labels_.size()) throw InputError("duplicate facet label");

    std::unordered_set<Label> used;
    std::set<std::set<Label>> seen_vertices;
    for (const auto& vertex : vertices_) {
        std::set<Label> facets(vertex.begin(), vertex.end());
        if (facets.size() != vertex.size()) throw InputError("polytope vertex lists a facet twice");
        if (static_cast<int>(facets.size()) != dimension_)
            throw InputError("simplicity violated: a vertex must lie on exactly n facets");
        for (const Label& f : facets) {
            if (!known.count(f)) throw InputError("polytope vertex references unknown facet '" + f + "'");
            used.insert(f);
        }
        if (!seen_vertices.insert(facets).second)
            throw InputError("two polytope vertices share the same facet set");
    }
    for (const Label& f : facet_labels_)
        if (!used.count(f)) throw InputError("facet '" + f + "' appears in no polytope vertex");
    if (dimension_ > 0 && vertices_.empty()) throw InputError("a positive-dimensional polytope has vertices");
}

SimplicialComplex nerve_of_simple_polytope(const SimplePolytopeCombinatorics& P) {
    return SimplicialComplex::from_maximal_faces(P.facet_labels(), P.polytope_vertices());
}

}  // namespace toric
