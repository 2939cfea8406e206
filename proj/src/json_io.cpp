#include "toric/json_io.hpp"

#include <fstream>

#include "toric/errors.hpp"

namespace toric {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string("missing required key '") + key + "'");
    return j.at(key);
}

std::vector<Label> label_array(const json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of strings");
    std::vector<Label> out;
    for (const json& e : j) {
        if (!e.is_string()) throw SchemaError(std::string(what) + " must contain only strings");
        out.push_back(e.get<Label>());
    }
    return out;
}

std::vector<std::vector<Label>> label_matrix(const json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of arrays");
    std::vector<std::vector<Label>> out;
    for (const json& row : j) out.push_back(label_array(row, what));
    return out;
}

std::int64_t integer(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw SchemaError(std::string(what) + " must be an integer (floats are not accepted)");
    return j.get<std::int64_t>();
}

}  // namespace

json complex_to_json(const SimplicialComplex& K) {
    json faces = json::array();
    for (FaceMask f : K.maximal_faces()) faces.push_back(K.face_labels(f));
    return json{{"vertices", K.vertex_labels()}, {"maximal_faces", faces}};
}

SimplicialComplex complex_from_json(const json& j) {
    std::vector<Label> vertices = label_array(require(j, "vertices"), "vertices");
    auto faces = label_matrix(require(j, "maximal_faces"), "maximal_faces");
    try {
        return SimplicialComplex::from_maximal_faces(std::move(vertices), faces);
    } catch (const InputError& e) {
        throw SchemaError(std::string("invalid complex: ") + e.what());
    }
}

SimplePolytopeCombinatorics polytope_from_json(const json& j) {
    int dimension = static_cast<int>(integer(require(j, "dimension"), "dimension"));
    std::vector<Label> facets = label_array(require(j, "facets"), "facets");
    auto vertices = label_matrix(require(j, "vertices"), "vertices");
    return SimplePolytopeCombinatorics(dimension, std::move(facets), std::move(vertices));
}

json matrix_to_json(const IntMatrix& m) {
    json data = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(m.at(i, j2));
        data.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

json matrix_to_json(const CharacteristicMatrix& m) {
    json out = matrix_to_json(m.matrix);
    out["column_labels"] = m.column_labels;
    return out;
}

IntMatrix int_matrix_from_json(const json& j) {
    int rows = static_cast<int>(integer(require(j, "rows"), "rows"));
    int cols = static_cast<int>(integer(require(j, "cols"), "cols"));
    const json& data = require(j, "data");
    if (!data.is_array() || static_cast<int>(data.size()) != rows)
        throw SchemaError("data must be an array with one entry per row");
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = data.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw SchemaError("each data row must have exactly 'cols' integers");
        for (int c = 0; c < cols; ++c) m.at(i, c) = integer(row.at(c), "matrix entry");
    }
    return m;
}

CharacteristicMatrix characteristic_matrix_from_json(const json& j) {
    IntMatrix m = int_matrix_from_json(j);
    std::vector<Label> labels;
    if (j.contains("column_labels")) {
        labels = label_array(j.at("column_labels"), "column_labels");
    } else {
        for (int c = 1; c <= m.cols(); ++c) labels.push_back(std::to_string(c));
    }
    try {
        return CharacteristicMatrix::create(std::move(m), std::move(labels));
    } catch (const InputError& e) {
        throw SchemaError(std::string("invalid matrix: ") + e.what());
    }
}

json betti_to_json(const BettiTable& t) {
    json ranks = json::object();
    for (const auto& [deg, r] : t.ranks) ranks[std::to_string(deg)] = r;
    json torsion = json::object();
    for (const auto& [deg, factors] : t.torsion) torsion[std::to_string(deg)] = factors;
    return json{{"ranks", ranks}, {"torsion", torsion}};
}

BettiTable betti_from_json(const json& j) {
    BettiTable t;
    for (const auto& [key, value] : require(j, "ranks").items())
        t.ranks[std::stoi(key)] = integer(value, "rank");
    if (j.contains("torsion"))
        for (const auto& [key, value] : j.at("torsion").items()) {
            std::vector<std::int64_t> factors;
            for (const json& f : value) factors.push_back(integer(f, "torsion factor"));
            t.torsion[std::stoi(key)] = std::move(factors);
        }
    return t;
}

json presentation_to_json(const RingPresentation& p) {
    return json{{"generators", p.generators},
                {"monomial_relations", p.monomial_relations},
                {"linear_relations", p.linear_relations}};
}

JSequence jsequence_from_string(const std::string& s) {
    std::vector<int> entries;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            entries.push_back(v);
        } catch (const std::exception&) {
            throw InputError("J must be a comma-separated list of positive integers, got '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return JSequence(entries);
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("invalid JSON in '" + path + "': " + e.what());
    }
}

}  // namespace toric
