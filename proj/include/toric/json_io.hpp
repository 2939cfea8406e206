#pragma once

#include <string>

#include <json.hpp>

#include "toric/betti_table.hpp"
#include "toric/characteristic.hpp"
#include "toric/constructions.hpp"
#include "toric/polytope.hpp"
#include "toric/simplicial_complex.hpp"
#include "toric/smith.hpp"
#include "toric/toric_cohomology.hpp"

namespace toric {

// JSON schemas (all integer-valued, keys serialized in sorted order):
//   complex   {"vertices": ["a","b"], "maximal_faces": [["a","b"]]}
//   polytope  {"dimension": 2, "facets": ["F1",...], "vertices": [["F1","F2"],...]}
//   matrix    {"rows": 2, "cols": 3, "data": [[1,0,-1],[0,1,-1]],
//              "column_labels": [...]}        (column_labels optional on input)
//   betti     {"ranks": {"0": 1, "3": 2}, "torsion": {"1": [2]}}

nlohmann::json complex_to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const nlohmann::json& j);

SimplePolytopeCombinatorics polytope_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const IntMatrix& m);
nlohmann::json matrix_to_json(const CharacteristicMatrix& m);
IntMatrix int_matrix_from_json(const nlohmann::json& j);

/// Reads a matrix, defaulting absent column labels to "1".."cols".
CharacteristicMatrix characteristic_matrix_from_json(const nlohmann::json& j);

nlohmann::json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const nlohmann::json& j);

nlohmann::json presentation_to_json(const RingPresentation& p);

/// Parses a comma-separated positive-integer list such as "1,2,3".
JSequence jsequence_from_string(const std::string& s);

nlohmann::json load_json_file(const std::string& path);

}  // namespace toric
