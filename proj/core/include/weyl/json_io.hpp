#pragma once

#include <nlohmann/json.hpp>

#include "weyl/lie_basis.hpp"
#include "weyl/matrix.hpp"
#include "weyl/polar.hpp"

namespace weyl {

/// [[ [re, im], ... ], ...], row-major.
nlohmann::json rowsToJson(const Matrix& a);

/// Inverse of rowsToJson. Throws InputError on ragged or malformed input.
Matrix rowsFromJson(const nlohmann::json& rows);

/// { "dim": int, "rows": [[ [re, im], ... ], ...] }.
nlohmann::json matrixToJson(const Matrix& a);

/// Reads the matrix schema above. "dim" must match the row count.
Matrix matrixFromJson(const nlohmann::json& j);

/// { "n", "kind", "generators": [ { "label", "matrix" } ] }.
nlohmann::json basisToJson(const GeneratorBasis& basis);

/// { "theta", "u", "regular", "minGap" }.
nlohmann::json polarToJson(const PolarForm& pf);

}  // namespace weyl
