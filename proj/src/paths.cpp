#include "heisgeo/paths.hpp"

#include <cmath>

namespace heisgeo {

BangBangParams bang_bang_params(const HPoint& w) {
    BangBangParams out;
    const double disc = w.t + 2.0 * w.x * w.y;
    // |disc| < 1e-300 would overflow 1/(4b); the degenerate branch is exact
    // there up to the same magnitude.
    if (std::fabs(disc) < 1e-300) {
        out.a = w.x;
        out.b = w.y;
        out.degenerate = true;
        return out;
    }
    double b = std::sqrt(std::fabs(0.5 * w.t + w.x * w.y));
    if (disc < 0.0) b = -b;
    out.b = b;
    out.a = w.x - disc / (4.0 * b);
    out.c = out.a - w.x;
    out.d = out.b - w.y;
    return out;
}

BangBangPath bang_bang(const HPoint& p, const HPoint& q) {
    const BangBangParams P = bang_bang_params(mul(inv(p), q));
    const double disp[4] = {P.a, P.b, -P.c, -P.d};
    const Axis axes[4] = {Axis::X, Axis::Y, Axis::X, Axis::Y};

    BangBangPath path;
    path.segments.reserve(4);
    HPoint cur = p;
    for (int i = 0; i < 4; ++i) {
        AxisSegment seg{axes[i], cur, disp[i]};
        cur = seg.end();
        path.segments.push_back(seg);
    }
    return path;
}

double cc_length(const BangBangPath& path) {
    double acc = 0.0;
    for (const AxisSegment& s : path.segments) acc += std::fabs(s.displacement);
    return acc;
}

double pi_t_length(const Polyline3& curve) {
    if (curve.vertices.empty())
        throw invalid_parameter("pi_t_length: polyline needs at least one vertex");
    double acc = 0.0;
    for (size_t i = 1; i < curve.vertices.size(); ++i) {
        acc += std::fabs(curve.vertices[i].x - curve.vertices[i - 1].x);
        acc += std::fabs(curve.vertices[i].y - curve.vertices[i - 1].y);
    }
    return acc;
}

Polyline3 as_polyline(const BangBangPath& path, int samples_per_segment) {
    if (samples_per_segment < 1)
        throw invalid_parameter("as_polyline: samples_per_segment must be >= 1");
    Polyline3 out;
    out.vertices.push_back(path.start());
    for (const AxisSegment& seg : path.segments) {
        for (int k = 1; k <= samples_per_segment; ++k) {
            const double s = seg.displacement * (static_cast<double>(k) / samples_per_segment);
            out.vertices.push_back(seg.at(s));
        }
    }
    return out;
}

} // namespace heisgeo
