#pragma once

#include <string>

#include "json.hpp"
#include "lme/lrcalc.hpp"
#include "lme/states.hpp"
#include "lme/telescope.hpp"
#include "lme/young.hpp"

namespace lme {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "lme-forge/1";

/// "5,3,2" -> (5,3,2); "" and "0" give the empty partition.
Partition parse_lambda(const std::string& text);

Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

/// {"5.3.2": "multiplicity", ...} in descending shape order.
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

/// {"d", "N", "amplitudes": [{"index", "re", "im"}]}; non-unit site norms
/// and scale are added as "site_norms2" and "scale2".
Json to_json(const StateVector& psi);
StateVector state_from_json(const Json& j);

/// [{"step", "label", "rows": [{"row", "count"}]}], zero counts omitted.
Json trace_json(const ExpansionPlan& plan);

/// {"schema": kSchema, ...body}.
Json with_schema(const Json& body);

}  // namespace lme
