#include "toric/constructions.hpp"

#include <numeric>

#include "toric/errors.hpp"

namespace toric {

JSequence::JSequence(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int j : entries_)
        if (j < 1) throw InputError("J entries must be positive");
    d_ = std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

Label block_vertex_label(const Label& base, const Label& inner) {
    return base + "." + inner;
}

namespace {

// Per-block bit layout of the output complex: block i occupies j_i
// consecutive positions in block-major order.
struct BlockLayout {
    std::vector<int> offset;
    std::vector<int> width;
    int total = 0;

    FaceMask block_mask(int i) const {
        return (width[i] == kMaxVertices ? ~FaceMask{0} : ((FaceMask{1} << width[i]) - 1))
               << offset[i];
    }
};

BlockLayout make_layout(const std::vector<int>& widths) {
    BlockLayout layout;
    for (int w : widths) {
        layout.offset.push_back(layout.total);
        layout.width.push_back(w);
        layout.total += w;
    }
    if (layout.total > kMaxVertices)
        throw InputError("construction output exceeds the vertex limit");
    return layout;
}

}  // namespace

SimplicialComplex simplicial_wedge(const SimplicialComplex& K, const JSequence& J) {
    if (J.size() != K.vertex_count())
        throw InputError("J must have one entry per vertex of K");
    BlockLayout layout = make_layout(J.entries());

    std::vector<Label> vertices;
    for (int i = 0; i < K.vertex_count(); ++i)
        for (int k = 1; k <= J.entries()[i]; ++k)
            vertices.push_back(block_vertex_label(K.vertex_labels()[i], std::to_string(k)));

    std::vector<FaceMask> blown;
    for (FaceMask mnf : K.minimal_non_face_masks()) {
        FaceMask big = 0;
        for (int i = 0; i < K.vertex_count(); ++i)
            if (mnf & (FaceMask{1} << i)) big |= layout.block_mask(i);
        blown.push_back(big);
    }
    return SimplicialComplex::from_minimal_non_face_masks(std::move(vertices), blown);
}

SimplicialComplex composed_complex(const SimplicialComplex& K,
                                   const std::vector<SimplicialComplex>& parts) {
    int m = K.vertex_count();
    if (static_cast<int>(parts.size()) != m)
        throw InputError("composed_complex needs one part per vertex of K");
    std::vector<int> widths;
    for (const SimplicialComplex& part : parts) {
        if (part.vertex_count() < 1) throw InputError("parts must have at least one vertex");
        widths.push_back(part.vertex_count());
    }
    BlockLayout layout = make_layout(widths);

    std::vector<Label> vertices;
    for (int i = 0; i < m; ++i)
        for (const Label& w : parts[i].vertex_labels())
            vertices.push_back(block_vertex_label(K.vertex_labels()[i], w));

    // V_σ ⊆ V_τ for σ ⊆ τ, so the union over all faces of K equals the union
    // over its maximal faces. Maximal faces of a join are unions of maximal
    // faces of the factors.
    std::vector<FaceMask> faces;
    for (FaceMask sigma : K.maximal_faces()) {
        std::vector<FaceMask> partial{0};
        for (int i = 0; i < m; ++i) {
            std::vector<FaceMask> grown;
            if (sigma & (FaceMask{1} << i)) {
                for (FaceMask p : partial) grown.push_back(p | layout.block_mask(i));
            } else {
                for (FaceMask p : partial)
                    for (FaceMask mf : parts[i].maximal_faces())
                        grown.push_back(p | (mf << layout.offset[i]));
            }
            partial = std::move(grown);
        }
        faces.insert(faces.end(), partial.begin(), partial.end());
    }
    return SimplicialComplex::from_maximal_face_masks(std::move(vertices), std::move(faces));
}

ParamTransform parameter_transform_wedge(int m, int n, const JSequence& J) {
    if (J.size() != m) throw InputError("J must have length m");
    if (n > m) throw InputError("transform requires n <= m");
    if (n < 0) throw InputError("transform requires n >= 0");
    long long d = J.d();
    return ParamTransform{m, n, m - n, d, d - m + n, m - n};
}

ParamTransform parameter_transform_composed(int m, int n, const JSequence& J, long long N) {
    if (J.size() != m) throw InputError("J must have length m");
    if (n > m) throw InputError("transform requires n <= m");
    if (n < 0 || N < 0) throw InputError("transform requires nonnegative dimensions");
    long long d = J.d();
    return ParamTransform{m, n, m - n, d, n + N, d - n - N};
}

}  // namespace toric
