#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toric {

using Label = std::string;

/// A face is a bitmask over vertex positions: bit i corresponds to the i-th
/// entry of the complex's vertex list. Position order is the canonical order
/// for every matrix-column convention in the toolkit.
using FaceMask = std::uint64_t;

constexpr int kMaxVertices = 64;

/// Finite abstract simplicial complex with an explicit ordered vertex set,
/// stored by its inclusion-maximal faces.
///
/// The empty face is always present; the minimal complex is {∅} (stored as the
/// single mask 0). Vertices that lie in no face are ghosts and are perfectly
/// legal — ∂Δ⁰ is {∅} on one ghost vertex.
class SimplicialComplex {
public:
    /// The complex {∅} on no vertices.
    SimplicialComplex();

    /// Builds a complex from any generating set of faces; non-maximal input
    /// faces are dropped. Faces referencing unknown vertices are rejected.
    static SimplicialComplex from_maximal_faces(std::vector<Label> vertices,
                                                const std::vector<std::vector<Label>>& faces);

    /// Inverse of minimal_non_faces: faces are exactly the subsets containing
    /// no element of `mnfs`. `mnfs` must be an antichain of nonempty sets.
    static SimplicialComplex from_minimal_non_faces(std::vector<Label> vertices,
                                                    const std::vector<std::vector<Label>>& mnfs);

    // Mask-level factories used by the constructions.
    static SimplicialComplex from_maximal_face_masks(std::vector<Label> vertices,
                                                     std::vector<FaceMask> faces);
    static SimplicialComplex from_minimal_non_face_masks(std::vector<Label> vertices,
                                                         const std::vector<FaceMask>& mnfs);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Label>& vertex_labels() const { return vertices_; }

    /// Position of a label in the vertex list; unknown labels are an input error.
    int vertex_index(const Label& label) const;

    /// Maximal faces in canonical order (by size, then by position order).
    const std::vector<FaceMask>& maximal_faces() const { return faces_; }

    bool is_face(FaceMask f) const;

    /// All faces including ∅, in canonical order.
    std::vector<FaceMask> all_face_masks() const;

    /// Inclusion-minimal non-faces, in canonical order.
    std::vector<FaceMask> minimal_non_face_masks() const;

    /// -1 for the complex {∅}.
    int dimension() const;

    /// True when all maximal faces have equal size.
    bool is_pure() const;

    FaceMask full_mask() const;
    FaceMask mask_from_labels(const std::vector<Label>& labels) const;
    std::vector<Label> face_labels(FaceMask f) const;

    /// Same vertex count and the same face sets under the positional vertex
    /// identification; labels are ignored.
    bool same_faces_by_position(const SimplicialComplex& other) const;

    /// The same complex with vertices renamed positionally.
    SimplicialComplex relabeled(std::vector<Label> new_labels) const;

    bool operator==(const SimplicialComplex& other) const = default;

private:
    std::vector<Label> vertices_;
    std::vector<FaceMask> faces_;
};

/// Minimal non-faces as label sets; the complex is reconstructible from its
/// vertex list plus this family.
std::vector<std::vector<Label>> minimal_non_faces(const SimplicialComplex& K);

/// Join K ∗ L. Vertex label sets must be disjoint; faces are the unions
/// σ ∪ τ with σ ∈ K, τ ∈ L.
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);

/// Full subcomplex K_S: the faces of K contained in S, on vertex set S
/// (ghosts allowed).
SimplicialComplex full_subcomplex(const SimplicialComplex& K, const std::vector<Label>& S);
SimplicialComplex full_subcomplex_mask(const SimplicialComplex& K, FaceMask S);

/// ∂Δ^{j−1} on vertices "1".."j"; for j = 1 the complex {∅} with one ghost.
SimplicialComplex simplex_boundary(int j);

/// Δ^{j−1} on vertices "1".."j".
SimplicialComplex full_simplex(int j);

/// Face-count vector: counts[k] = f_{k-1}, so counts[0] = f_{-1} = 1.
struct FVector {
    std::vector<long long> counts;
    bool operator==(const FVector&) const = default;
};

/// counts[i] = h_i for i = 0..n.
struct HVector {
    std::vector<long long> counts;
    bool operator==(const HVector&) const = default;
};

FVector f_vector(const SimplicialComplex& K);

/// h-vector of a pure complex of dimension n−1, via
/// Σ_i f_{i−1}(t−1)^{n−i} = Σ_i h_i t^{n−i}.
HVector h_vector(const SimplicialComplex& K, int n);

/// Unreduced Euler characteristic Σ_{k≥0} (−1)^k f_k.
long long euler_characteristic(const FVector& f);

}  // namespace toric
