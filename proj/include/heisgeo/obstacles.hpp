#pragma once

#include <string>
#include <vector>

#include "heisgeo/core.hpp"
#include "heisgeo/paths.hpp"

namespace heisgeo {

// Closed axis-aligned box (Euclidean sense).
struct Box3 {
    double x0 = 0, x1 = 0, y0 = 0, y1 = 0, t0 = 0, t1 = 0;

    bool contains(const HPoint& p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1 && p.t >= t0 && p.t <= t1;
    }
    double diameter() const {
        const double dx = x1 - x0, dy = y1 - y0, dt = t1 - t0;
        return std::sqrt(dx * dx + dy * dy + dt * dt);
    }
    HPoint center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1), 0.5 * (t0 + t1)}; }
};

// Closed ball in the Koranyi gauge metric.
struct KoranyiBall {
    HPoint center;
    double radius = 0.0;

    bool contains(const HPoint& p) const { return koranyi_dist(center, p) <= radius; }
};

// Closed union of primitives with exact membership and clearance predicates.
struct ObstacleSet {
    std::vector<Box3> boxes;
    std::vector<KoranyiBall> balls;

    bool contains(const HPoint& p) const;
    bool empty() const { return boxes.empty() && balls.empty(); }
};

// True iff the segment, inflated by a Koranyi margin, misses every primitive.
// Boxes are tested by exact interval intersection in the segment parameter
// (the inflation enlarges the box soundly, accounting for the group twist);
// balls reduce to the minimum of a quartic polynomial over the parameter range.
bool segment_clear(const ObstacleSet& A, const AxisSegment& seg, double margin = 0.0);

// Same predicate for a straight coordinate-lattice edge from `a`, along one
// coordinate axis, of signed length `len` (t constant along x/y edges).
enum class CoordAxis { X, Y, T };
bool coord_edge_clear(const ObstacleSet& A, const HPoint& a, CoordAxis axis, double len,
                      double margin = 0.0);

// Largest margin m <= cap such that the point clears A by m, via bisection.
// Returns 0 if the point is inside or touching A.
double clear_radius(const ObstacleSet& A, const HPoint& p, double cap);

// ---------------------------------------------------------------------------
// Recursive 24-box maze.

struct MazeLayout {
    int tiers = 2;            // slabs split into 24/tiers rows per tier
    double overlap = 0.8;     // consecutive-tier footprint overlap; pocket = (1-overlap)/2
    double t_fill = 0.02;     // tier slab thickness as a fraction of the parent t-extent
    double moat_frac = 1e-5;  // clearance from the parent boundary (fraction of min planar side)
    double crack_frac = 1e-5; // gap between sibling slabs within a tier
};

struct MazeTree {
    int n = 1;
    int levels = 0;
    MazeLayout layout;
    Box3 root;
    // level_boxes[j] holds all level-j boxes; children of box i sit at
    // indices 24*i .. 24*i+23 of level j+1.
    std::vector<std::vector<Box3>> level_boxes;
    double max_diameter_ratio = 0.0; // achieved max child/parent diameter ratio

    const Box3& box(int level, long index) const { return level_boxes.at(level).at(index); }
    long count(int level) const { return static_cast<long>(level_boxes.at(level).size()); }
};

// The 24 children of one parent under the switchback layout: rows stacked
// along the longer planar axis, grouped into tiers at thin t-slices, with a
// free pocket at alternating corners so descent must weave corner to corner.
std::vector<Box3> layout_children(const Box3& parent, const MazeLayout& layout);

// Root box [-10n,10n]^2 x [-1/2,1/2] refined `levels` times, 24-fold each.
// Throws invalid_layout if the layout violates disjointness or containment.
MazeTree build_maze(int n, int levels, const MazeLayout& layout = {});

ObstacleSet maze_level_union(const MazeTree& tree, int level);

// ---------------------------------------------------------------------------
// Assembly of the counterexample set: component n is the maze configuration
// dilated and left-translated into the ball B((0,0,1/n), r_n), r_n < n^-2/10.

struct AssembledComponent {
    int n = 1;
    HPoint center;       // (0, 0, 1/n)
    double radius = 0.0; // cc-radius of the containing ball
    double scale = 0.0;  // dilation applied before translation
    MazeTree tree;       // source maze in original coordinates
};

struct AssembledSet {
    std::vector<AssembledComponent> components;
    bool includes_origin = true;
};

AssembledSet assemble_A(const std::vector<MazeTree>& trees);

} // namespace heisgeo
