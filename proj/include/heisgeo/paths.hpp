#pragma once

#include <vector>

#include "heisgeo/core.hpp"

namespace heisgeo {

enum class Axis { X, Y };

// Horizontal line segment following a single frame field. The displacement is
// the control integral (signed); the segment is a Euclidean line segment in
// coordinates and its cc-length is |displacement|.
struct AxisSegment {
    Axis axis = Axis::X;
    HPoint start;
    double displacement = 0.0;

    // Group-law interpolation: start * (s,0,0) or start * (0,s,0).
    HPoint at(double s) const {
        if (axis == Axis::X) return {start.x + s, start.y, start.t + 2.0 * start.y * s};
        return {start.x, start.y + s, start.t - 2.0 * start.x * s};
    }
    HPoint end() const { return at(displacement); }
};

// Finite concatenation of X- and Y-line segments with matching endpoints.
struct BangBangPath {
    std::vector<AxisSegment> segments;

    HPoint start() const { return segments.empty() ? HPoint{} : segments.front().start; }
    HPoint end() const { return segments.empty() ? HPoint{} : segments.back().end(); }
};

// The four controls of the X,Y,X,Y construction, for a target reached from
// the origin: segments X(a), Y(b), X(-c), Y(-d).
struct BangBangParams {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    bool degenerate = false; // target satisfied t = -2xy, so c = d = 0
};

// A general continuous curve given by its vertices (not necessarily horizontal).
struct Polyline3 {
    std::vector<HPoint> vertices;
};

// Controls for reaching `target` from the origin.
BangBangParams bang_bang_params(const HPoint& target);

// Four-segment X,Y,X,Y path from p to q; cc-length <= 5*sqrt(2)*d_cc(p,q).
BangBangPath bang_bang(const HPoint& p, const HPoint& q);

double cc_length(const BangBangPath& path);

// Taxicab length of the pi_t projection; vertical moves contribute nothing.
double pi_t_length(const Polyline3& curve);

Polyline3 as_polyline(const BangBangPath& path, int samples_per_segment);

} // namespace heisgeo
