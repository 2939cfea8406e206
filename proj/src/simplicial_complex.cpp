#include "toric/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "toric/errors.hpp"

namespace toric {

namespace {

bool face_order(FaceMask a, FaceMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

void check_vertices(const std::vector<Label>& vertices) {
    if (vertices.size() > static_cast<std::size_t>(kMaxVertices))
        throw InputError("complex exceeds the " + std::to_string(kMaxVertices) + "-vertex limit");
    std::unordered_set<Label> seen;
    for (const Label& v : vertices)
        if (!seen.insert(v).second)
            throw InputError("duplicate vertex label '" + v + "'");
}

// Drop duplicates and non-maximal faces; {∅} is kept as the single mask 0
// when no nonempty face exists.
std::vector<FaceMask> normalize_maximal(std::vector<FaceMask> faces) {
    std::sort(faces.begin(), faces.end(), face_order);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<FaceMask> keep;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool contained = false;
        for (std::size_t j = i + 1; j < faces.size() && !contained; ++j)
            contained = (faces[i] & ~faces[j]) == 0;
        if (!contained) keep.push_back(faces[i]);
    }
    if (keep.empty()) keep.push_back(0);
    return keep;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : faces_{0} {}

SimplicialComplex SimplicialComplex::from_maximal_face_masks(std::vector<Label> vertices,
                                                             std::vector<FaceMask> faces) {
    check_vertices(vertices);
    FaceMask full = vertices.empty() ? 0 : (~FaceMask{0} >> (kMaxVertices - vertices.size()));
    for (FaceMask f : faces)
        if ((f & ~full) != 0) throw InputError("face references a vertex outside the complex");
    SimplicialComplex K;
    K.vertices_ = std::move(vertices);
    K.faces_ = normalize_maximal(std::move(faces));
    return K;
}

SimplicialComplex SimplicialComplex::from_maximal_faces(
    std::vector<Label> vertices, const std::vector<std::vector<Label>>& faces) {
    check_vertices(vertices);
    std::unordered_map<Label, int> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<FaceMask> masks;
    masks.reserve(faces.size());
    for (const auto& face : faces) {
        FaceMask m = 0;
        for (const Label& v : face) {
            auto it = index.find(v);
            if (it == index.end()) throw InputError("face references unknown vertex '" + v + "'");
            m |= FaceMask{1} << it->second;
        }
        masks.push_back(m);
    }
    return from_maximal_face_masks(std::move(vertices), std::move(masks));
}

SimplicialComplex SimplicialComplex::from_minimal_non_face_masks(
    std::vector<Label> vertices, const std::vector<FaceMask>& mnfs) {
    check_vertices(vertices);
    FaceMask full = vertices.empty() ? 0 : (~FaceMask{0} >> (kMaxVertices - vertices.size()));
    for (FaceMask n : mnfs) {
        if (n == 0) throw InputError("minimal non-faces must be nonempty");
        if ((n & ~full) != 0) throw InputError("minimal non-face references a vertex outside the complex");
    }
    for (std::size_t i = 0; i < mnfs.size(); ++i)
        for (std::size_t j = 0; j < mnfs.size(); ++j)
            if (i != j && (mnfs[i] & ~mnfs[j]) == 0)
                throw InputError("minimal non-faces must form an antichain");

    // Start from the full simplex and split every face that still contains a
    // forbidden set.
    std::vector<FaceMask> faces{full};
    for (FaceMask n : mnfs) {
        std::vector<FaceMask> next;
        for (FaceMask s : faces) {
            if ((n & ~s) == 0) {
                FaceMask rest = n;
                while (rest) {
                    FaceMask bit = rest & (~rest + 1);
                    next.push_back(s & ~bit);
                    rest &= rest - 1;
                }
            } else {
                next.push_back(s);
            }
        }
        faces = normalize_maximal(std::move(next));
    }
    SimplicialComplex K;
    K.vertices_ = std::move(vertices);
    K.faces_ = std::move(faces);
    return K;
}

SimplicialComplex SimplicialComplex::from_minimal_non_faces(
    std::vector<Label> vertices, const std::vector<std::vector<Label>>& mnfs) {
    check_vertices(vertices);
    std::unordered_map<Label, int> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<FaceMask> masks;
    for (const auto& mnf : mnfs) {
        FaceMask m = 0;
        for (const Label& v : mnf) {
            auto it = index.find(v);
            if (it == index.end())
                throw InputError("minimal non-face references unknown vertex '" + v + "'");
            m |= FaceMask{1} << it->second;
        }
        masks.push_back(m);
    }
    return from_minimal_non_face_masks(std::move(vertices), masks);
}

int SimplicialComplex::vertex_index(const Label& label) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == label) return static_cast<int>(i);
    throw InputError("unknown vertex label '" + label + "'");
}

bool SimplicialComplex::is_face(FaceMask f) const {
    for (FaceMask mf : faces_)
        if ((f & ~mf) == 0) return true;
    return false;
}

std::vector<FaceMask> SimplicialComplex::all_face_masks() const {
    std::unordered_set<FaceMask> seen;
    for (FaceMask mf : faces_) {
        FaceMask s = mf;
        while (true) {
            seen.insert(s);
            if (s == 0) break;
            s = (s - 1) & mf;
        }
    }
    std::vector<FaceMask> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), face_order);
    return out;
}

std::vector<FaceMask> SimplicialComplex::minimal_non_face_masks() const {
    int v = vertex_count();
    if (v > 26)
        throw ResourceError("minimal non-face enumeration is limited to 26 vertices");
    std::vector<FaceMask> out;
    FaceMask full = full_mask();
    for (FaceMask s = 1; s <= full && full != 0; ++s) {
        if (is_face(s)) continue;
        bool minimal = true;
        FaceMask rest = s;
        while (rest && minimal) {
            FaceMask bit = rest & (~rest + 1);
            minimal = is_face(s & ~bit);
            rest &= rest - 1;
        }
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), face_order);
    return out;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (FaceMask f : faces_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

bool SimplicialComplex::is_pure() const {
    for (FaceMask f : faces_)
        if (std::popcount(f) != std::popcount(faces_.front())) return false;
    return true;
}

FaceMask SimplicialComplex::full_mask() const {
    return vertices_.empty() ? 0 : (~FaceMask{0} >> (kMaxVertices - vertices_.size()));
}

FaceMask SimplicialComplex::mask_from_labels(const std::vector<Label>& labels) const {
    FaceMask m = 0;
    for (const Label& v : labels) m |= FaceMask{1} << vertex_index(v);
    return m;
}

std::vector<Label> SimplicialComplex::face_labels(FaceMask f) const {
    std::vector<Label> out;
    for (int i = 0; i < vertex_count(); ++i)
        if (f & (FaceMask{1} << i)) out.push_back(vertices_[i]);
    return out;
}

bool SimplicialComplex::same_faces_by_position(const SimplicialComplex& other) const {
    return vertex_count() == other.vertex_count() && faces_ == other.faces_;
}

SimplicialComplex SimplicialComplex::relabeled(std::vector<Label> new_labels) const {
    if (new_labels.size() != vertices_.size())
        throw InputError("relabeling must provide one label per vertex");
    return from_maximal_face_masks(std::move(new_labels), faces_);
}

std::vector<std::vector<Label>> minimal_non_faces(const SimplicialComplex& K) {
    std::vector<std::vector<Label>> out;
    for (FaceMask m : K.minimal_non_face_masks()) out.push_back(K.face_labels(m));
    return out;
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
    std::vector<Label> vertices = K.vertex_labels();
    for (const Label& v : L.vertex_labels()) {
        for (const Label& w : K.vertex_labels())
            if (v == w) throw InputError("join requires disjoint vertex labels; '" + v + "' collides");
        vertices.push_back(v);
    }
    std::vector<FaceMask> faces;
    for (FaceMask a : K.maximal_faces())
        for (FaceMask b : L.maximal_faces())
            faces.push_back(a | (b << K.vertex_count()));
    return SimplicialComplex::from_maximal_face_masks(std::move(vertices), std::move(faces));
}

SimplicialComplex full_subcomplex_mask(const SimplicialComplex& K, FaceMask S) {
    if ((S & ~K.full_mask()) != 0) throw InputError("subcomplex vertex set is not a subset");
    std::vector<Label> vertices;
    std::vector<int> position(K.vertex_count(), -1);
    for (int i = 0; i < K.vertex_count(); ++i)
        if (S & (FaceMask{1} << i)) {
            position[i] = static_cast<int>(vertices.size());
            vertices.push_back(K.vertex_labels()[i]);
        }
    std::vector<FaceMask> faces;
    for (FaceMask f : K.maximal_faces()) {
        FaceMask cut = f & S, packed = 0;
        for (int i = 0; i < K.vertex_count(); ++i)
            if (cut & (FaceMask{1} << i)) packed |= FaceMask{1} << position[i];
        faces.push_back(packed);
    }
    return SimplicialComplex::from_maximal_face_masks(std::move(vertices), std::move(faces));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& K, const std::vector<Label>& S) {
    return full_subcomplex_mask(K, K.mask_from_labels(S));
}

SimplicialComplex simplex_boundary(int j) {
    if (j < 1) throw InputError("simplex_boundary requires j >= 1");
    std::vector<Label> vertices;
    for (int i = 1; i <= j; ++i) vertices.push_back(std::to_string(i));
    FaceMask full = ~FaceMask{0} >> (kMaxVertices - j);
    std::vector<FaceMask> faces;
    if (j == 1) {
        faces.push_back(0);
    } else {
        for (int i = 0; i < j; ++i) faces.push_back(full & ~(FaceMask{1} << i));
    }
    return SimplicialComplex::from_maximal_face_masks(std::move(vertices), std::move(faces));
}

SimplicialComplex full_simplex(int j) {
    if (j < 1) throw InputError("full_simplex requires j >= 1");
    std::vector<Label> vertices;
    for (int i = 1; i <= j; ++i) vertices.push_back(std::to_string(i));
    return SimplicialComplex::from_maximal_face_masks(std::move(vertices),
                                                      {~FaceMask{0} >> (kMaxVertices - j)});
}

FVector f_vector(const SimplicialComplex& K) {
    FVector f;
    f.counts.assign(static_cast<std::size_t>(K.dimension()) + 2, 0);
    for (FaceMask face : K.all_face_masks()) f.counts[std::popcount(face)] += 1;
    return f;
}

HVector h_vector(const SimplicialComplex& K, int n) {
    if (n < 0) throw InputError("h_vector requires n >= 0");
    if (!K.is_pure() || K.dimension() != n - 1)
        throw InputError("h_vector requires a pure complex of dimension n-1");
    FVector f = f_vector(K);
    // Coefficients of Σ_i f_{i−1}(t−1)^{n−i} in the monomial basis.
    std::vector<long long> coeff(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) {
        int p = n - i;
        long long binom = 1;  // C(p, q), built up incrementally
        for (int q = 0; q <= p; ++q) {
            long long sign = ((p - q) % 2 == 0) ? 1 : -1;
            coeff[q] += f.counts[i] * sign * binom;
            binom = binom * (p - q) / (q + 1);
        }
    }
    HVector h;
    h.counts.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) h.counts[k] = coeff[n - k];
    return h;
}

long long euler_characteristic(const FVector& f) {
    long long chi = 0;
    for (std::size_t k = 1; k < f.counts.size(); ++k)
        chi += (k % 2 == 1 ? 1 : -1) * f.counts[k];
    return chi;
}

}  // namespace toric
