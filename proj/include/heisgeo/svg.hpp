#pragma once

#include <string>
#include <vector>

#include "heisgeo/obstacles.hpp"
#include "heisgeo/paths.hpp"

namespace heisgeo {

// Planar (pi_t) projection drawing: obstacle footprints as rectangles and
// circles, paths as polylines. Pure function of its inputs.
std::string svg_plan_view(const std::vector<Box3>& boxes,
                          const std::vector<KoranyiBall>& balls,
                          const std::vector<Polyline3>& paths);

std::string polyline_csv(const Polyline3& poly);

} // namespace heisgeo
