#pragma once

#include <string>

#include <json.hpp>

#include "heisgeo/estimator.hpp"
#include "heisgeo/obstacles.hpp"
#include "heisgeo/paths.hpp"

namespace heisgeo {

using json = nlohmann::json;

json to_json(const HPoint& p);
HPoint hpoint_from_json(const json& j);

json to_json(const Box3& b);
Box3 box_from_json(const json& j);

json to_json(const ObstacleSet& A);
ObstacleSet obstacles_from_json(const json& j);

json to_json(const MazeLayout& L);
MazeLayout layout_from_json(const json& j);

// Maze document: layout params, provenance, and all boxes by multi-index.
json to_json(const MazeTree& tree);
MazeTree maze_from_json(const json& j);

json to_json(const AssembledSet& A);
AssembledSet assembled_from_json(const json& j);

json to_json(const BangBangPath& path);
json to_json(const Polyline3& poly);
json to_json(const PathEstimate& est, const ObstacleSet& obstacles);
json to_json(const DimEstimate& est);

// FNV-1a digest of a JSON document's compact dump, as fixed-width hex.
std::string json_digest(const json& j);

} // namespace heisgeo
