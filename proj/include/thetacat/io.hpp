#pragma once

#include <json.hpp>

#include "thetacat/lifting.hpp"
#include "thetacat/simplicial.hpp"

namespace thetacat {

using Json = nlohmann::ordered_json;

Json to_json(const FiniteNCat& c);
FiniteNCat ncat_from_json(const Json& j);  // validates; throws invalid_argument

Json to_json(const Table& t);
Table table_from_json(const Json& j);

Json to_json(const SimplicialSetFinite& x);
SimplicialSetFinite simplicial_from_json(const Json& j);  // validates

Json bounds_json(const Site& s);
// Every element of every object, by canonical encoding.
Json presheaf_dump(const Presheaf& x);
// Images of the nondegenerate cells, which determine the map.
Json map_json(const PresheafMap& m);
Json to_json(const RlpReport& r);

}  // namespace thetacat
