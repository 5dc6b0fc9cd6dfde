#pragma once

// JSON forms of the element types.
//
//   Scalar     {"num": [[exp, "p/r"], ...], "den": [[exp, "p/r"], ...]}, ascending exponents
//   MatAlgElem {"ambient": [m, n], "terms": [{"mono": [[i, j, e], ...], "coeff": Scalar}, ...]}
//   GrassElem  {"ambient": [m, n], "terms": [{"tableau": [[cols], ...], "coeff": Scalar}, ...]}
//   DhomElem   {"ambient": [m, n], "powers": [{"c": int, "numer": GrassElem}, ...]}

#include "qgr/coeff.hpp"
#include "qgr/dehom.hpp"
#include "qgr/grassmann.hpp"
#include "qgr/qmatrix.hpp"

#include <nlohmann/json.hpp>

namespace qgr {

using Json = nlohmann::json;

Json to_json(const Scalar& s);
Json to_json(const MatAlgElem& a);
Json to_json(const GrassElem& g);
Json to_json(const DhomElem& d);

// Readers throw std::invalid_argument on malformed input.
Scalar scalar_from_json(const Json& j);
MatAlgElem matalg_from_json(const Json& j);
GrassElem grass_from_json(const Json& j);
DhomElem dhom_from_json(const Json& j);

}  // namespace qgr
