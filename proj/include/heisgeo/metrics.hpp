#pragma once

#include <vector>

#include "heisgeo/core.hpp"

namespace heisgeo {

// One member of the one-parameter family of geodesics joining a vertically
// separated pair. Samples lie exactly on the lifted circle; the polyline's
// projected length converges to the arc length as the sample count grows.
struct GeodesicArc {
    HPoint start;
    HPoint end;
    double rotation_parameter = 0.0;
    std::vector<HPoint> samples;

    // Euclidean length of the pi_t projection of the sample polyline.
    double length() const;
};

// Closed form for the cc-distance between p and p*(0,0,dt): sqrt(pi*|dt|).
double cc_dist_vertical(const HPoint& p, double dt);

// Carnot-Caratheodory distance. Reduces to the closed form for vertically
// separated pairs; otherwise solves the monotone arc-angle equation for the
// geodesic lift of a circular arc (safeguarded bisection, 200-iteration cap).
double cc_dist(const HPoint& p, const HPoint& q, double tol = 1e-8);

// Lift of the planar circle through proj_t(p) of area |dt|/4, rotated by
// theta about the vertical line through p. n_samples >= 2 (dt = 0 degenerates
// to a single-point arc). The lift integrates dt = 2y dx - 2x dy exactly.
GeodesicArc vertical_geodesic(const HPoint& p, double dt, double theta, int n_samples);

} // namespace heisgeo
