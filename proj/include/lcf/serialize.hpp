#pragma once

#include <string>

#include <json.hpp>

#include "lcf/bounds.hpp"
#include "lcf/constructions.hpp"
#include "lcf/graph.hpp"
#include "lcf/list_assignment.hpp"
#include "lcf/search.hpp"

namespace lcf {

using Json = nlohmann::json;

// Big integers are always written as decimal strings.

Json to_json(const Graph& g);           ///< {"num_vertices": N, "edges": [[u,v], ...]}, u < v
Graph graph_from_json(const Json& j);

Json to_json(const ListAssignment& L);  ///< {"lists": [[...], ...]}, each sorted
/// Accepts a bare assignment or any object carrying one under "assignment"
/// (a witness record, for instance).
ListAssignment assignment_from_json(const Json& j);

Json to_json(const WitnessRecord& w);
WitnessRecord witness_from_json(const Json& j);

Json to_json(const BoundReport& r);

Json to_json(const EmpiricalTauRow& row);
std::string csv_header();
std::string to_csv(const EmpiricalTauRow& row);

} // namespace lcf
