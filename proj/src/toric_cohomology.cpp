#include "toric/toric_cohomology.hpp"

#include <unordered_map>

#include "toric/errors.hpp"

namespace toric {

BettiTable toric_betti(const SimplicialComplex& K, int n) {
    HVector h = h_vector(K, n);
    BettiTable table;
    for (int i = 0; i <= n; ++i)
        if (h.counts[i] != 0) table.ranks[2 * i] = h.counts[i];
    return table;
}

RingPresentation cohomology_presentation(const SimplicialComplex& K,
                                         const CharacteristicMatrix& lambda) {
    if (lambda.cols() != K.vertex_count())
        throw InputError("lambda must have one column per vertex of K");
    std::unordered_map<Label, int> col;
    for (int j = 0; j < lambda.cols(); ++j) col[lambda.column_labels[j]] = j;

    RingPresentation pres;
    pres.generators = K.vertex_labels();
    pres.monomial_relations = minimal_non_faces(K);
    for (int r = 0; r < lambda.rows(); ++r) {
        std::vector<std::int64_t> form(K.vertex_count());
        for (int i = 0; i < K.vertex_count(); ++i) {
            auto it = col.find(K.vertex_labels()[i]);
            if (it == col.end())
                throw InputError("matrix columns do not match complex vertices: missing '" +
                                 K.vertex_labels()[i] + "'");
            form[i] = lambda.matrix.at(r, it->second);
        }
        pres.linear_relations.push_back(std::move(form));
    }
    return pres;
}

}  // namespace toric
