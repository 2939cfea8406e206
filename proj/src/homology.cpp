#include "toric/homology.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>
#include <vector>

#include "toric/errors.hpp"
#include "toric/int_matrix.hpp"
#include "toric/smith.hpp"

namespace toric {

namespace {

// A contractible subcomplex contributes nothing; a common vertex of all
// maximal faces makes the complex a cone.
bool is_cone(const SimplicialComplex& K) {
    FaceMask common = ~FaceMask{0};
    for (FaceMask f : K.maximal_faces()) {
        if (f == 0) return false;  // the complex {∅} is not contractible here
        common &= f;
    }
    return common != 0;
}

}  // namespace

BettiTable reduced_homology(const SimplicialComplex& K) {
    BettiTable table;
    if (is_cone(K)) return table;

    std::vector<FaceMask> faces = K.all_face_masks();
    int dim = K.dimension();

    // faces grouped by dimension; by_dim[k+1] holds the k-faces.
    std::vector<std::vector<FaceMask>> by_dim(static_cast<std::size_t>(dim) + 2);
    std::vector<std::unordered_map<FaceMask, int>> index(by_dim.size());
    for (FaceMask f : faces) {
        int k = std::popcount(f);  // dimension + 1
        index[k][f] = static_cast<int>(by_dim[k].size());
        by_dim[k].push_back(f);
    }

    // boundary[k]: C_k -> C_{k-1} for k = 0..dim, with C_{-1} = Z.
    std::vector<int> rank(static_cast<std::size_t>(dim) + 2, 0);
    std::vector<std::vector<std::int64_t>> factors(static_cast<std::size_t>(dim) + 2);
    for (int k = 0; k <= dim; ++k) {
        const auto& domain = by_dim[k + 1];
        const auto& codomain = by_dim[k];
        IntMatrix boundary(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
        for (std::size_t j = 0; j < domain.size(); ++j) {
            FaceMask f = domain[j];
            std::int64_t sign = 1;
            FaceMask rest = f;
            while (rest) {
                FaceMask bit = rest & (~rest + 1);
                boundary.at(index[k].at(f & ~bit), static_cast<int>(j)) = sign;
                sign = -sign;
                rest &= rest - 1;
            }
        }
        SNFResult snf = smith_normal_form(boundary);
        rank[k] = snf.rank();
        for (std::int64_t d : snf.diagonal())
            if (d > 1) factors[k].push_back(d);
    }

    long long h_minus1 = 1 - rank[0];
    if (h_minus1 != 0) table.ranks[-1] = h_minus1;
    if (!factors[0].empty()) table.torsion[-1] = factors[0];
    for (int k = 0; k <= dim; ++k) {
        long long chains = static_cast<long long>(by_dim[k + 1].size());
        long long img_above = (k + 1 <= dim) ? rank[k + 1] : 0;
        long long betti = chains - rank[k] - img_above;
        if (betti != 0) table.ranks[k] = betti;
        if (k + 1 <= dim && !factors[k + 1].empty()) table.torsion[k] = factors[k + 1];
    }
    return table;
}

namespace {

std::vector<long long> hochster_term(const SimplicialComplex& K, FaceMask subset, int top) {
    std::vector<long long> b(static_cast<std::size_t>(top) + 1, 0);
    BettiTable h = reduced_homology(full_subcomplex_mask(K, subset));
    int size = std::popcount(subset);
    for (const auto& [deg, r] : h.ranks) {
        int k = deg + size + 1;
        if (k >= 0 && k <= top) b[k] += r;
    }
    return b;
}

BettiTable table_from_counts(const std::vector<long long>& b) {
    BettiTable table;
    for (std::size_t k = 0; k < b.size(); ++k)
        if (b[k] != 0) table.ranks[static_cast<int>(k)] = b[k];
    return table;
}

void check_cap(const SimplicialComplex& K, int max_vertices) {
    if (K.vertex_count() > max_vertices)
        throw ResourceError("hochster_betti is capped at " + std::to_string(max_vertices) +
                            " vertices (2^m subcomplexes); got " +
                            std::to_string(K.vertex_count()));
}

}  // namespace

BettiTable hochster_betti_serial(const SimplicialComplex& K, int max_vertices) {
    check_cap(K, max_vertices);
    int m = K.vertex_count();
    int top = 2 * m;
    std::vector<long long> b(static_cast<std::size_t>(top) + 1, 0);
    for (FaceMask subset = 0; subset < (FaceMask{1} << m); ++subset) {
        std::vector<long long> term = hochster_term(K, subset, top);
        for (int k = 0; k <= top; ++k) b[k] += term[k];
    }
    return table_from_counts(b);
}

BettiTable hochster_betti(const SimplicialComplex& K, int max_vertices) {
    check_cap(K, max_vertices);
    int m = K.vertex_count();
    int top = 2 * m;
    long long subsets = 1LL << m;
    std::vector<long long> b(static_cast<std::size_t>(top) + 1, 0);

#pragma omp parallel
    {
        std::vector<long long> local(static_cast<std::size_t>(top) + 1, 0);
#pragma omp for schedule(dynamic, 64) nowait
        for (long long subset = 0; subset < subsets; ++subset) {
            std::vector<long long> term = hochster_term(K, static_cast<FaceMask>(subset), top);
            for (int k = 0; k <= top; ++k) local[k] += term[k];
        }
#pragma omp critical
        for (int k = 0; k <= top; ++k) b[k] += local[k];
    }
    return table_from_counts(b);
}

}  // namespace toric
