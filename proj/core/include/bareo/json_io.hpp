#pragma once

#include <nlohmann/json_fwd.hpp>

#include "bareo/census.hpp"
#include "bareo/factorization.hpp"
#include "bareo/invariants.hpp"

namespace bareo {

using json = nlohmann::json;

// Canonical forms: vertex and edge lists sorted, edges as sorted pairs,
// point lists with vertices before edges. Serialization then re-parsing
// is the identity on every value below.

json to_json(const Graph& g);
Graph graph_from_json(const json& j);

json to_json(const BarePoint& p);
BarePoint point_from_json(const json& j);

json to_json(const PointSet& a);
PointSet point_set_from_json(const json& j);

json to_json(const PointMap& f);
PointMap point_map_from_json(const json& j);

json to_json(const MapClassification& c);
json to_json(const SeparationReport& r);
json to_json(const Factorization& f);
json to_json(const FiberReport& r);
json to_json(const CensusReport& r);
json to_json(const ThetaResult& r);
json to_json(const InvariantReport& r);
json to_json(const QuotientResult& r);

VertexAssignment assignment_from_json(const json& j);
std::vector<Edge> edge_list_from_json(const json& j);

} // namespace bareo
