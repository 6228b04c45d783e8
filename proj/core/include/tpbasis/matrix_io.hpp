#pragma once

// Matrix JSON round trip:
//   {"rows": R, "cols": C, "backend": "rational"|"decimal", "data": [[..],..]}
// with rational entries as "p/q" strings and decimal entries as signed
// scientific strings.

#include <string>

#include "json.hpp"
#include "tpbasis/matrix.hpp"

namespace tpb {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const RatMatrix& m);
Json matrix_to_json(const DecMatrix& m, int digits);

// "rational" or "decimal"
std::string matrix_backend(const Json& j);

RatMatrix rational_matrix_from_json(const Json& j);
DecMatrix decimal_matrix_from_json(const Json& j, const PrecisionConfig& cfg);

}  // namespace tpb
