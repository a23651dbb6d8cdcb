#pragma once

#include <nlohmann/json_fwd.hpp>

#include "cyclesat/bounds.hpp"
#include "cyclesat/constructions.hpp"
#include "cyclesat/saturation.hpp"
#include "cyclesat/structure.hpp"

namespace cyclesat {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Graph& g);  // adjacency-list report form
nlohmann::json to_json(const SaturationCertificate& cert);
nlohmann::json to_json(const SatResult& res);
nlohmann::json to_json(const StructurePartition& p);
nlohmann::json to_json(const PropertyReport& rep);
nlohmann::json to_json(const SatBound& b);

ConstructionSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const ConstructionSpec& spec);

}  // namespace cyclesat
