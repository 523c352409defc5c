// JSON encodings of matroids, vector configurations and polynomial families.
#pragma once

#include <json.hpp>

#include "mvt/matroid.hpp"
#include "mvt/vector_config.hpp"

namespace mvt {

using json = nlohmann::json;

// {"ground_size": d, "lines": [...], "loops": [...], "parallels": [...], "rank_cap": r}
json matroid_to_json(const Matroid& m);
// `presentation`, when given, receives the lines in the order they appear.
Matroid matroid_from_json(const json& j, std::vector<PointSet>* presentation = nullptr);

// {"1": ["1","0","0"], ...} with rationals as strings.
json config_to_json(const VectorConfig& c);
VectorConfig config_from_json(const json& j, int d = -1);

json point_set_to_json(const PointSet& s);

}  // namespace mvt
