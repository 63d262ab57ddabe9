#include "heisgeo/metrics.hpp"

#include <cmath>
#include <limits>

namespace heisgeo {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kMaxIters = 200;

// Vertical gain per unit chord^2 of a circular-arc lift with arc angle a:
// f(a) = (a - sin a) / (2 sin^2(a/2)), strictly increasing on (0, 2*pi).
double gain_ratio(double a) {
    const double s = std::sin(0.5 * a);
    double num;
    if (a < 0.1) {
        // a - sin a loses all digits for small a; use the series.
        const double a2 = a * a;
        num = a * a2 / 6.0 * (1.0 - a2 / 20.0 * (1.0 - a2 / 42.0 * (1.0 - a2 / 72.0)));
    } else {
        num = a - std::sin(a);
    }
    return num / (2.0 * s * s);
}

// f(2*pi - eps) evaluated without cancellation near the vertical limit.
double gain_ratio_tail(double eps) {
    const double s = std::sin(0.5 * eps);
    return (2.0 * kPi - eps + std::sin(eps)) / (2.0 * s * s);
}

// Distance for chord rho and arc angle a: L = rho * a / (2 sin(a/2)).
double arc_distance(double rho, double a) {
    return rho * a / (2.0 * std::sin(0.5 * a));
}

double arc_distance_tail(double rho, double eps) {
    return rho * (2.0 * kPi - eps) / (2.0 * std::sin(0.5 * eps));
}

// Bisection in log-space on (0, hi]; fn must be monotone with
// fn(lo) and fn(hi) bracketing the target.
template <typename F>
double solve_log_bisect(F fn, double target, double hi, bool increasing) {
    double ulo = std::log(1e-300), uhi = std::log(hi);
    for (int it = 0; it < kMaxIters && uhi - ulo > 1e-15; ++it) {
        const double umid = 0.5 * (ulo + uhi);
        const double v = fn(std::exp(umid));
        if (std::isnan(v)) throw numeric_failure("cc_dist: NaN during arc-angle solve");
        const bool go_right = increasing ? (v < target) : (v > target);
        if (go_right)
            ulo = umid;
        else
            uhi = umid;
    }
    return std::exp(0.5 * (ulo + uhi));
}

} // namespace

double cc_dist_vertical(const HPoint&, double dt) {
    return std::sqrt(kPi * std::fabs(dt));
}

double cc_dist(const HPoint& p, const HPoint& q, double tol) {
    if (!(tol > 0.0)) throw invalid_parameter("cc_dist: tol must be positive");
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.t) ||
        !std::isfinite(q.x) || !std::isfinite(q.y) || !std::isfinite(q.t))
        throw invalid_parameter("cc_dist: non-finite input");

    const HPoint w = mul(inv(p), q);
    const double rho = std::hypot(w.x, w.y);
    const double tau = std::fabs(w.t);
    if (tau == 0.0) return rho;
    if (rho == 0.0) return std::sqrt(kPi * tau);

    const double s = tau / (rho * rho);
    if (!std::isfinite(s)) return std::sqrt(kPi * tau); // rho^2 underflowed

    // f(pi) = pi/2 splits the two parametrizations.
    if (s <= 0.5 * kPi) {
        const double a = solve_log_bisect(gain_ratio, s, kPi, /*increasing=*/true);
        return arc_distance(rho, a);
    }
    const double eps = solve_log_bisect(gain_ratio_tail, s, kPi, /*increasing=*/false);
    return arc_distance_tail(rho, eps);
}

double GeodesicArc::length() const {
    double acc = 0.0;
    for (size_t i = 1; i < samples.size(); ++i)
        acc += std::hypot(samples[i].x - samples[i - 1].x, samples[i].y - samples[i - 1].y);
    return acc;
}

GeodesicArc vertical_geodesic(const HPoint& p, double dt, double theta, int n_samples) {
    if (n_samples < 2) throw invalid_parameter("vertical_geodesic: n_samples must be >= 2");

    GeodesicArc arc;
    arc.start = p;
    arc.end = mul(p, HPoint{0.0, 0.0, dt});
    arc.rotation_parameter = theta;
    if (dt == 0.0) {
        arc.samples = {p};
        return arc;
    }

    const double R = std::sqrt(std::fabs(dt) / (4.0 * kPi));
    const double cx = p.x + R * std::cos(theta);
    const double cy = p.y + R * std::sin(theta);
    const double psi0 = theta + kPi; // angle from the circle center back to p
    const double dir = dt > 0.0 ? -1.0 : 1.0; // clockwise lifts upward
    const double s0 = std::sin(psi0), c0 = std::cos(psi0);

    const int m = n_samples - 1;
    arc.samples.reserve(static_cast<size_t>(n_samples));
    for (int i = 0; i <= m; ++i) {
        const double u = 2.0 * kPi * static_cast<double>(i) / m;
        const double psi = psi0 + dir * u;
        const double sp = std::sin(psi), cp = std::cos(psi);
        // closed-form integral of 2(y dx - x dy) along the circle
        const double t = p.t + 2.0 * R * (cx * (s0 - sp) - cy * (c0 - cp)) - dir * 2.0 * R * R * u;
        arc.samples.push_back({cx + R * cp, cy + R * sp, t});
    }
    return arc;
}

} // namespace heisgeo
