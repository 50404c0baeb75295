#pragma once

// Machine-readable encodings shared by the CLI and its tests.
//
//   path          "NENE"
//   vector        {"nu": "ENENE", "entries": [2,0,1,1,2,2]}
//   permutation   [7,4,5,1,3]
//   trajectory    array of vectors, start first
//   polynomial    {"2": 1, "1": 1}, exponents as decimal-string keys, descending
//   series        array of decimal strings

#include "json.hpp"

#include "tamaripop/bracket_vector.hpp"
#include "tamaripop/permutation.hpp"
#include "tamaripop/pop.hpp"
#include "tamaripop/series.hpp"

namespace tamaripop {

using Json = nlohmann::ordered_json;

Json to_json(const LatticePath& path);
Json to_json(const BracketVector& vec);
Json to_json(const Permutation& p);
Json to_json(const PopTrajectory& traj);
Json to_json(const PopPolynomial& poly);
Json to_json(const IntSeries& series);

/// Throws std::invalid_argument on malformed input.
LatticePath path_from_json(const Json& j);
BracketVector vector_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);

}  // namespace tamaripop
