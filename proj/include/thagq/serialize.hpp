#pragma once

#include "thagq/equivariant.hpp"
#include "thagq/partitions.hpp"
#include "thagq/schur.hpp"
#include "thagq/unipoly.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>

namespace thagq {

using Json = nlohmann::ordered_json;

/// [3,2,2,1]
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// [{"partition": [...], "coeff": "decimal"}, ...] in reverse lexicographic order.
Json to_json(const SchurSum& s);
SchurSum schur_from_json(const Json& j, int degree);

/// {"n": n, "terms": [{"k": k, "schur": ...}]}
Json to_json(const GradedSchur& g);
GradedSchur graded_from_json(const Json& j);

/// {"n": n, "coeffs": ["c0", "c1", ...]}; "n" is omitted when absent.
Json poly_to_json(const UniPoly& p, std::optional<int> n = std::nullopt);
/// Inverse of poly_to_json; the index is nullopt when "n" is missing.
std::pair<std::optional<int>, UniPoly> poly_from_json(const Json& j);

/// Decimal integer or "a/b".
BigRational rational_from_string(const std::string& s);

}  // namespace thagq
