#pragma once

#include <string>

#include "json.hpp"
#include "tonnetz/cycle_space.h"
#include "tonnetz/geometry.h"
#include "tonnetz/graph.h"
#include "tonnetz/incidence.h"

namespace tonnetz {

nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);
std::string graph_to_dot(const LabeledGraph& g, const std::string& name = "tonnetz");

nlohmann::json structure_to_json(const IncidenceStructure& s);
IncidenceStructure structure_from_json(const nlohmann::json& j);

nlohmann::json cycle_to_json(const LabeledGraph& g, const Cycle& c);
nlohmann::json cycle_vector_to_json(const CycleVector& v);

// Exact coordinates are written as "p/q" strings.
nlohmann::json realization_to_json(const Realization& r);
Realization realization_from_json(const nlohmann::json& j);
nlohmann::json realization_to_json(const ApproxRealization& r);
nlohmann::json report_to_json(const RealizationReport& r);

}  // namespace tonnetz
