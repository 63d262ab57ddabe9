#pragma once

#include <cmath>

#include "heisgeo/errors.hpp"

namespace heisgeo {

// Point of the first Heisenberg group in exponential coordinates (x, y, t).
struct HPoint {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
};

struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

// Group law: (x,y,t)*(x',y',t') = (x+x', y+y', t+t'+2(x'y - xy')).
inline HPoint mul(const HPoint& p, const HPoint& q) {
    return {p.x + q.x, p.y + q.y, p.t + q.t + 2.0 * (q.x * p.y - p.x * q.y)};
}

inline HPoint inv(const HPoint& p) { return {-p.x, -p.y, -p.t}; }

// Anisotropic dilation delta_r(x,y,t) = (rx, ry, r^2 t), a group automorphism
// and a similarity of every gauge used in this library.
inline HPoint dilate(double r, const HPoint& p) {
    if (!(r > 0.0)) throw invalid_parameter("dilate: r must be positive");
    return {r * p.x, r * p.y, r * r * p.t};
}

// Rotation about the t-axis; an isometry. theta in radians, not normalized.
inline HPoint rotate(double theta, const HPoint& p) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {p.x * c - p.y * s, p.x * s + p.y * c, p.t};
}

// Projection onto the yt-plane along the x-axis splitting: p * (-x,0,0).
inline HPoint proj_x(const HPoint& p) { return {0.0, p.y, p.t - 2.0 * p.x * p.y}; }

// Projection onto the xt-plane along the y-axis splitting: p * (0,-y,0).
inline HPoint proj_y(const HPoint& p) { return {p.x, 0.0, p.t + 2.0 * p.x * p.y}; }

inline PlanarPoint proj_t(const HPoint& p) { return {p.x, p.y}; }

// Koranyi (gauge) norm ((x^2+y^2)^2 + t^2)^(1/4).
inline double koranyi_norm(const HPoint& p) {
    const double s = p.x * p.x + p.y * p.y;
    return std::sqrt(std::sqrt(s * s + p.t * p.t));
}

// Left-invariant Koranyi distance d(p,q) = ||p^{-1} * q||.
inline double koranyi_dist(const HPoint& p, const HPoint& q) {
    return koranyi_norm(mul(inv(p), q));
}

inline double planar_dist(const HPoint& p, const HPoint& q) {
    return std::hypot(q.x - p.x, q.y - p.y);
}

} // namespace heisgeo
