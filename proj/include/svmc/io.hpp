#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "svmc/petri_net.hpp"

namespace svmc {

using Json = nlohmann::json;

Json to_json(const Vector& v);
Json to_json(const SymbolicVector& sv);
// Array of {"include": [[...]], "exclude": [[...], ...]} in member order.
Json to_json(const SymbolicVectorSet& svs);

Vector vector_from_json(const Json& j);
SymbolicVector sv_from_json(const Json& j);
// Members are canonicalized as a set; dim is needed for the empty array.
SymbolicVectorSet svs_from_json(const Json& j, std::size_t dim);

// {"capacities": {"<place id>": k, ...}}
std::map<std::string, Count> parse_capacity_sidecar(const Json& j);
std::map<std::string, Count> load_capacity_sidecar(const std::string& path);

}  // namespace svmc
