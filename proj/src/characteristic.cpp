#include "toric/characteristic.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

#include "toric/errors.hpp"

namespace toric {

CharacteristicMatrix CharacteristicMatrix::create(IntMatrix matrix,
                                                  std::vector<Label> column_labels) {
    if (static_cast<int>(column_labels.size()) != matrix.cols())
        throw InputError("need exactly one column label per matrix column");
    std::unordered_set<Label> seen;
    for (const Label& l : column_labels)
        if (!seen.insert(l).second) throw InputError("duplicate column label '" + l + "'");
    return CharacteristicMatrix{std::move(matrix), std::move(column_labels)};
}

int CharacteristicMatrix::column_index(const Label& label) const {
    for (std::size_t i = 0; i < column_labels.size(); ++i)
        if (column_labels[i] == label) return static_cast<int>(i);
    throw InputError("unknown column label '" + label + "'");
}

namespace {

// Map complex vertex position -> matrix column, matching by label.
std::vector<int> column_of_vertex(const SimplicialComplex& K, const CharacteristicMatrix& lambda) {
    if (K.vertex_count() != lambda.cols())
        throw InputError("column count does not match the vertex count");
    std::unordered_map<Label, int> col;
    for (int j = 0; j < lambda.cols(); ++j) col[lambda.column_labels[j]] = j;
    std::vector<int> map(K.vertex_count());
    for (int i = 0; i < K.vertex_count(); ++i) {
        auto it = col.find(K.vertex_labels()[i]);
        if (it == col.end())
            throw InputError("matrix columns do not match complex vertices: missing '" +
                             K.vertex_labels()[i] + "'");
        map[i] = it->second;
    }
    return map;
}

// One face check; returns true and fills `witness` on failure.
bool face_fails(const SimplicialComplex& K, const CharacteristicMatrix& lambda,
                const std::vector<int>& vertex_col, RegularityMode mode, FaceMask face,
                std::vector<std::int64_t>& witness) {
    std::vector<int> cols;
    for (int i = 0; i < K.vertex_count(); ++i)
        if (face & (FaceMask{1} << i)) cols.push_back(vertex_col[i]);
    int l = static_cast<int>(cols.size());
    int n = lambda.rows();

    if (mode == RegularityMode::VerticesOnly) {
        std::vector<int> rows(n);
        for (int i = 0; i < n; ++i) rows[i] = i;
        std::int64_t minor = minor_det(lambda.matrix, rows, cols);
        witness = {minor};
        return std::llabs(minor) != 1;
    }

    IntMatrix block(n, l);
    for (int j = 0; j < l; ++j)
        for (int i = 0; i < n; ++i) block.at(i, j) = lambda.matrix.at(i, cols[j]);
    witness = smith_normal_form(block).diagonal();
    if (l > n) return true;
    for (int i = 0; i < l; ++i)
        if (witness[i] != 1) return true;
    return false;
}

std::vector<FaceMask> regularity_faces(const SimplicialComplex& K,
                                       const CharacteristicMatrix& lambda, RegularityMode mode) {
    if (mode == RegularityMode::VerticesOnly) {
        if (!K.is_pure() || K.dimension() != lambda.rows() - 1)
            throw InputError("VerticesOnly regularity requires K pure of dimension n-1");
        return K.maximal_faces();
    }
    std::vector<FaceMask> faces = K.all_face_masks();
    std::erase(faces, FaceMask{0});
    return faces;
}

}  // namespace

RegularityReport check_regularity_serial(const SimplicialComplex& K,
                                         const CharacteristicMatrix& lambda, RegularityMode mode) {
    std::vector<int> vertex_col = column_of_vertex(K, lambda);
    std::vector<FaceMask> faces = regularity_faces(K, lambda, mode);
    RegularityReport report;
    for (FaceMask face : faces) {
        std::vector<std::int64_t> witness;
        if (face_fails(K, lambda, vertex_col, mode, face, witness))
            report.failures.push_back({K.face_labels(face), std::move(witness)});
    }
    report.ok = report.failures.empty();
    return report;
}

RegularityReport check_regularity(const SimplicialComplex& K, const CharacteristicMatrix& lambda,
                                  RegularityMode mode) {
    std::vector<int> vertex_col = column_of_vertex(K, lambda);
    std::vector<FaceMask> faces = regularity_faces(K, lambda, mode);
    int count = static_cast<int>(faces.size());
    std::vector<char> failed(count, 0);
    std::vector<std::vector<std::int64_t>> witnesses(count);

#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < count; ++idx) {
        std::vector<std::int64_t> witness;
        if (face_fails(K, lambda, vertex_col, mode, faces[idx], witness)) {
            failed[idx] = 1;
            witnesses[idx] = std::move(witness);
        }
    }

    // Aggregation in face-enumeration order keeps the report deterministic.
    RegularityReport report;
    for (int idx = 0; idx < count; ++idx)
        if (failed[idx])
            report.failures.push_back({K.face_labels(faces[idx]), std::move(witnesses[idx])});
    report.ok = report.failures.empty();
    return report;
}

CharacteristicMatrix diagonal_sphere_matrix(int j) {
    if (j < 1) throw InputError("diagonal_sphere_matrix requires j >= 1");
    IntMatrix m(j - 1, j);
    for (int i = 0; i < j - 1; ++i) {
        m.at(i, i) = 1;
        m.at(i, j - 1) = -1;
    }
    std::vector<Label> labels;
    for (int i = 1; i <= j; ++i) labels.push_back(std::to_string(i));
    return CharacteristicMatrix::create(std::move(m), std::move(labels));
}

namespace {

struct LambdaLayout {
    int m = 0;
    long long d = 0;
    std::vector<int> doubled_offset;  // first doubled column of block i
    std::vector<int> width;           // j_i

    int original_column(int i) const { return static_cast<int>(d) - m + i; }
};

LambdaLayout lambda_layout(const std::vector<int>& widths) {
    LambdaLayout layout;
    layout.m = static_cast<int>(widths.size());
    int off = 0;
    for (int w : widths) {
        if (w < 1) throw InputError("block widths must be positive");
        layout.doubled_offset.push_back(off);
        layout.width.push_back(w);
        off += w - 1;
    }
    layout.d = off + layout.m;
    return layout;
}

}  // namespace

CharacteristicMatrix build_lambda_J(const CharacteristicMatrix& lambda, const JSequence& J) {
    int m = lambda.cols(), n = lambda.rows();
    if (J.size() != m) throw InputError("J must have one entry per column of lambda");
    LambdaLayout layout = lambda_layout(J.entries());
    int d = static_cast<int>(layout.d);

    IntMatrix out(d - m + n, d);
    std::vector<Label> labels(d);
    int r = 0;
    for (int i = 0; i < m; ++i) {
        const Label& base = lambda.column_labels[i];
        for (int t = 0; t < layout.width[i] - 1; ++t) {
            out.at(r, layout.doubled_offset[i] + t) = 1;
            out.at(r, layout.original_column(i)) = -1;
            ++r;
            labels[layout.doubled_offset[i] + t] = block_vertex_label(base, std::to_string(t + 2));
        }
        labels[layout.original_column(i)] = block_vertex_label(base, "1");
    }
    for (int nr = 0; nr < n; ++nr)
        for (int i = 0; i < m; ++i) out.at(r + nr, layout.original_column(i)) = lambda.matrix.at(nr, i);
    return CharacteristicMatrix::create(std::move(out), std::move(labels));
}

CharacteristicMatrix build_lambda_JN(const CharacteristicMatrix& lambda,
                                     const std::vector<CharacteristicMatrix>& parts) {
    int m = lambda.cols(), n = lambda.rows();
    if (static_cast<int>(parts.size()) != m)
        throw InputError("need one part matrix per column of lambda");
    std::vector<int> widths;
    long long N = 0;
    for (const CharacteristicMatrix& part : parts) {
        if (part.cols() < 1) throw InputError("part matrices must have at least one column");
        widths.push_back(part.cols());
        N += part.rows();
    }
    LambdaLayout layout = lambda_layout(widths);
    int d = static_cast<int>(layout.d);

    IntMatrix out(static_cast<int>(N) + n, d);
    std::vector<Label> labels(d);
    int r = 0;
    for (int i = 0; i < m; ++i) {
        const CharacteristicMatrix& part = parts[i];
        const Label& base = lambda.column_labels[i];
        int j = layout.width[i];
        for (int br = 0; br < part.rows(); ++br) {
            for (int t = 0; t < j - 1; ++t)
                out.at(r, layout.doubled_offset[i] + t) = part.matrix.at(br, t);
            out.at(r, layout.original_column(i)) = part.matrix.at(br, j - 1);
            ++r;
        }
        for (int t = 0; t < j - 1; ++t)
            labels[layout.doubled_offset[i] + t] = block_vertex_label(base, part.column_labels[t]);
        labels[layout.original_column(i)] = block_vertex_label(base, part.column_labels[j - 1]);
    }
    for (int nr = 0; nr < n; ++nr)
        for (int i = 0; i < m; ++i) out.at(r + nr, layout.original_column(i)) = lambda.matrix.at(nr, i);
    return CharacteristicMatrix::create(std::move(out), std::move(labels));
}

std::pair<int, Lattice> rank_and_kernel(const CharacteristicMatrix& m) {
    SNFResult snf = smith_normal_form(m.matrix);
    return {snf.rank(), kernel_basis(m.matrix)};
}

Lattice q_subgroup(const std::vector<CharacteristicMatrix>& parts, const JSequence& J) {
    if (static_cast<int>(parts.size()) != J.size())
        throw InputError("need one part matrix per J entry");
    std::vector<int> widths;
    for (int i = 0; i < J.size(); ++i) {
        if (parts[i].cols() != J.entries()[i])
            throw InputError("part matrix width must equal the J entry");
        widths.push_back(parts[i].cols());
    }
    LambdaLayout layout = lambda_layout(widths);
    int d = static_cast<int>(layout.d);

    std::vector<std::vector<std::int64_t>> basis;
    for (int i = 0; i < layout.m; ++i) {
        int j = layout.width[i];
        for (const std::vector<std::int64_t>& w : kernel_basis(parts[i].matrix).basis) {
            std::vector<std::int64_t> g(d, 0);
            for (int t = 0; t < j - 1; ++t) g[layout.doubled_offset[i] + t] = w[t];
            g[layout.original_column(i)] = w[j - 1];
            basis.push_back(std::move(g));
        }
    }
    return Lattice::from_basis(d, std::move(basis));
}

std::string to_string(Containment c) {
    switch (c) {
        case Containment::OverZ: return "contained_over_z";
        case Containment::OverQ: return "contained_over_q_only";
        case Containment::No: return "not_contained";
    }
    return "not_contained";
}

KernelInQReport kernel_in_q_report(const CharacteristicMatrix& lambda_jn, const Lattice& Q) {
    if (Q.ambient != lambda_jn.cols())
        throw InputError("Q ambient dimension must match the matrix column count");
    auto [rank, kernel] = rank_and_kernel(lambda_jn);
    KernelInQReport report;
    report.rank = rank;
    report.kernel_rank = kernel.rank();
    report.q_rank = Q.rank();
    report.kernel_vectors = kernel.basis;
    bool all_z = true, all_q = true;
    for (const std::vector<std::int64_t>& v : kernel.basis) {
        Membership m = lattice_membership(Q, v);
        report.memberships.push_back(m);
        if (m != Membership::InZSpan) all_z = false;
        if (m == Membership::Outside) all_q = false;
    }
    report.summary = all_z ? Containment::OverZ : (all_q ? Containment::OverQ : Containment::No);
    return report;
}

}  // namespace toric
