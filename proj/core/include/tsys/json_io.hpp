#pragma once

#include <nlohmann/json.hpp>

#include "tsys/catalan_tuple.hpp"
#include "tsys/transfer_system.hpp"

namespace tsys {

/// {"n": <int>, "relations": [[i, j], ...]} with relations sorted
/// lexicographically. Round trips exactly.
nlohmann::json system_to_json(const TransferSystem& sys);

/// Parses and validates; schema problems throw Error, domain problems throw
/// the usual validation errors.
TransferSystem system_from_json(const nlohmann::json& j);

/// {"entries": [s_0, ..., s_r]}
nlohmann::json tuple_to_json(const CatalanTuple& tuple);
CatalanTuple tuple_from_json(const nlohmann::json& j);

}  // namespace tsys
