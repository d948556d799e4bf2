#pragma once

#include "toric/collections.hpp"
#include "toric/divisor.hpp"
#include "toric/fan.hpp"
#include "toric/symmetry.hpp"

#include <json.hpp>

#include <string>

namespace toric {

using Json = nlohmann::ordered_json;

/// Fan schema: {"rank": n, "rays": [[..]..], "max_cones": [[0-based]..]}.
Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

/// Divisor: plain integer array in the fan's ray order.
Json divisor_to_json(const TDivisor& d);
TDivisor divisor_from_json(const Json& j);

/// Collection: {"divisors": [[..]..], "blocks": [end-indices..]?}.
Json collection_to_json(const Fan& fan, const PicardLattice& lat, const Collection& coll);
Collection collection_from_json(const PicardLattice& lat, const Json& j);

/// Group report: order, element orders, per-element ray permutations.
Json group_to_json(const FanAutGroup& g, const Fan& fan);

/// Group input: {"matrices": [[[row]..]..]} of lattice automorphisms.
std::vector<IntMatrix> matrices_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace toric
