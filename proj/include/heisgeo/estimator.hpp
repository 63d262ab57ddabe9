#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "heisgeo/core.hpp"
#include "heisgeo/obstacles.hpp"
#include "heisgeo/paths.hpp"

namespace heisgeo {

// Lattice discretization of a box. Nodes sit at bounds corners plus integer
// multiples of the steps; query endpoints must land on nodes (within 1e-9).
struct GridSpec {
    Box3 bounds;
    double hx = 0.1, hy = 0.1, ht = 0.1;
};

// Shortest-path result. The cost is recomputed from the realizing polyline,
// so cost == pi_t_length(polyline) exactly; it is an upper bound on the true
// infimum over the discretized region.
struct PathEstimate {
    bool reached = false;
    double cost = 0.0;
    Polyline3 polyline;
    double hx = 0, hy = 0, ht = 0; // resolution record
    long nodes_expanded = 0;
};

// Dijkstra over the lattice with edge costs hx (x-moves), hy (y-moves) and 0
// (t-moves). Free t-column segments are collapsed into single supernodes, so
// zero-weight edges cannot cycle. Obstacles are honored exactly: a node inside
// any primitive is removed, and an edge whose straight lattice segment meets a
// primitive is removed, even when the primitive is thinner than the t-step.
PathEstimate grid_pi_distance(const ObstacleSet& A, const HPoint& p, const HPoint& q,
                              const GridSpec& g);

// Cost of crossing a level-j maze box from its top-face center to its
// bottom-face center while the projection stays strictly inside the box's
// open planar rectangle; obstacles are the box's level-(j+1) children.
PathEstimate interior_crossing_cost(const MazeTree& tree, int level, double step,
                                    long box_index = 0);

// ---------------------------------------------------------------------------
// Box-counting dimension.

enum class Gauge { Euclidean, Koranyi };

struct DimEstimate {
    Gauge gauge = Gauge::Euclidean;
    std::vector<double> scales;
    std::vector<double> counts;
    double slope = 0.0;
};

// Covering counts over cells of size d x d x d (Euclidean) or d x d x d^2
// (Koranyi, the homogeneous cells comparable to gauge balls), least-squares
// slope of log N against log 1/d. Needs >= 4 scales spanning >= 1.5 decades.
DimEstimate box_dimension(const std::vector<HPoint>& sample, Gauge gauge,
                          const std::vector<double>& scales);

// Same, counting cells met by the exact union of level-j maze boxes.
DimEstimate box_dimension(const MazeTree& tree, int level, Gauge gauge,
                          const std::vector<double>& scales);

// Dimension comparison envelope: (max{a, 2a-2}, min{2a, a+1}) for a in [0,3].
std::pair<double, double> dct_bounds(double alpha);

} // namespace heisgeo
