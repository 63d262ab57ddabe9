#include "heisgeo/obstacles.hpp"

#include <algorithm>
#include <cmath>

#include "heisgeo/metrics.hpp"

namespace heisgeo {

namespace {

struct Interval {
    double lo, hi;
    bool empty() const { return lo > hi; }
};

Interval intersect(Interval a, Interval b) {
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

// Box inflated so it contains every point within Koranyi distance m of the
// box: x/y grow by m, t by m^2 plus the twist bound 2m(max|x| + max|y|).
Box3 inflate(const Box3& b, double m) {
    if (m <= 0.0) return b;
    const double mx = std::max(std::fabs(b.x0), std::fabs(b.x1));
    const double my = std::max(std::fabs(b.y0), std::fabs(b.y1));
    const double et = m * m + 2.0 * m * (mx + my + 2.0 * m);
    return {b.x0 - m, b.x1 + m, b.y0 - m, b.y1 + m, b.t0 - et, b.t1 + et};
}

// Parameter interval where the affine value v0 + slope*s lies in [lo, hi];
// the whole line if slope == 0 and v0 in range, empty otherwise.
Interval affine_hits(double v0, double slope, double lo, double hi) {
    if (slope == 0.0) {
        if (v0 >= lo && v0 <= hi) return {-1e308, 1e308};
        return {1.0, 0.0};
    }
    double a = (lo - v0) / slope, b = (hi - v0) / slope;
    if (a > b) std::swap(a, b);
    return {a, b};
}

// Does the segment (piecewise-affine coordinates of s on [s0,s1]) meet the box?
bool box_hit(const Box3& box, double x0, double sx, double y0, double sy, double t0,
             double st, double s0, double s1) {
    Interval iv{s0, s1};
    iv = intersect(iv, affine_hits(x0, sx, box.x0, box.x1));
    if (iv.empty()) return false;
    iv = intersect(iv, affine_hits(y0, sy, box.y0, box.y1));
    if (iv.empty()) return false;
    iv = intersect(iv, affine_hits(t0, st, box.t0, box.t1));
    return !iv.empty();
}

// Minimum over [s0,s1] of P(s) = ((alpha+s)^2 + beta^2)^2 + (mu + nu*s)^2.
// P' = 4u^3 + Bu + C in u = alpha+s with B >= 0, so P has a single minimum.
double quartic_min(double alpha, double beta, double mu, double nu, double s0, double s1) {
    const double B = 4.0 * beta * beta + 2.0 * nu * nu;
    const double C = 2.0 * nu * mu - 2.0 * nu * nu * alpha;
    // unique real root of 4u^3 + Bu + C
    double u;
    if (C == 0.0) {
        u = 0.0;
    } else {
        const double p = B / 4.0, q = C / 4.0;
        const double disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        const double w1 = -q / 2.0 - (q > 0 ? disc : -disc); // same-sign sum, no cancellation
        const double w2 = (p == 0.0) ? 0.0 : -(p * p * p / 27.0) / w1;
        u = std::cbrt(w1) + std::cbrt(w2);
        for (int it = 0; it < 2; ++it) { // Newton polish
            const double f = 4.0 * u * u * u + B * u + C;
            const double df = 12.0 * u * u + B;
            if (df > 0.0) u -= f / df;
        }
    }
    const double s = std::clamp(u - alpha, s0, s1);
    const double r2 = (alpha + s) * (alpha + s) + beta * beta;
    const double lin = mu + nu * s;
    return r2 * r2 + lin * lin;
}

bool ball_hit_quartic(const KoranyiBall& ball, double alpha, double beta, double mu,
                      double nu, double s0, double s1, double margin) {
    const double R = ball.radius + margin;
    return quartic_min(alpha, beta, mu, nu, s0, s1) <= R * R * R * R;
}

} // namespace

bool ObstacleSet::contains(const HPoint& p) const {
    for (const Box3& b : boxes)
        if (b.contains(p)) return true;
    for (const KoranyiBall& b : balls)
        if (b.contains(p)) return true;
    return false;
}

bool segment_clear(const ObstacleSet& A, const AxisSegment& seg, double margin) {
    const double s0 = std::min(0.0, seg.displacement);
    const double s1 = std::max(0.0, seg.displacement);
    const HPoint& o = seg.start;

    for (const Box3& box : A.boxes) {
        const Box3 b = inflate(box, margin);
        const bool hit =
            seg.axis == Axis::X
                ? box_hit(b, o.x, 1.0, o.y, 0.0, o.t, 2.0 * o.y, s0, s1)
                : box_hit(b, o.x, 0.0, o.y, 1.0, o.t, -2.0 * o.x, s0, s1);
        if (hit) return false;
    }
    for (const KoranyiBall& ball : A.balls) {
        const HPoint w = mul(inv(ball.center), o);
        const bool hit =
            seg.axis == Axis::X
                ? ball_hit_quartic(ball, w.x, w.y, w.t, 2.0 * w.y, s0, s1, margin)
                : ball_hit_quartic(ball, w.y, w.x, w.t, -2.0 * w.x, s0, s1, margin);
        if (hit) return false;
    }
    return true;
}

bool coord_edge_clear(const ObstacleSet& A, const HPoint& a, CoordAxis axis, double len,
                      double margin) {
    const double s0 = std::min(0.0, len), s1 = std::max(0.0, len);
    for (const Box3& box : A.boxes) {
        const Box3 b = inflate(box, margin);
        bool hit = false;
        switch (axis) {
            case CoordAxis::X: hit = box_hit(b, a.x, 1.0, a.y, 0.0, a.t, 0.0, s0, s1); break;
            case CoordAxis::Y: hit = box_hit(b, a.x, 0.0, a.y, 1.0, a.t, 0.0, s0, s1); break;
            case CoordAxis::T: hit = box_hit(b, a.x, 0.0, a.y, 0.0, a.t, 1.0, s0, s1); break;
        }
        if (hit) return false;
    }
    for (const KoranyiBall& ball : A.balls) {
        const HPoint w = mul(inv(ball.center), a);
        bool hit = false;
        switch (axis) {
            case CoordAxis::X:
                hit = ball_hit_quartic(ball, w.x, w.y, w.t, 2.0 * ball.center.y, s0, s1, margin);
                break;
            case CoordAxis::Y:
                hit = ball_hit_quartic(ball, w.y, w.x, w.t, -2.0 * ball.center.x, s0, s1, margin);
                break;
            case CoordAxis::T: {
                const double r2 = w.x * w.x + w.y * w.y;
                const double tlo = w.t + s0, thi = w.t + s1;
                const double tmin = (tlo <= 0.0 && thi >= 0.0) ? 0.0
                                    : std::min(std::fabs(tlo), std::fabs(thi));
                const double R = ball.radius + margin;
                hit = r2 * r2 + tmin * tmin <= R * R * R * R;
                break;
            }
        }
        if (hit) return false;
    }
    return true;
}

double clear_radius(const ObstacleSet& A, const HPoint& p, double cap) {
    const AxisSegment pt{Axis::X, p, 0.0};
    if (!segment_clear(A, pt, 0.0)) return 0.0;
    if (segment_clear(A, pt, cap)) return cap;
    double lo = 0.0, hi = cap;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (segment_clear(A, pt, mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

// ---------------------------------------------------------------------------
// Maze construction.

namespace {

void validate_layout_params(const MazeLayout& L) {
    if (L.tiers < 1 || 24 % L.tiers != 0)
        throw invalid_parameter("maze layout: tiers must divide 24");
    if (!(L.overlap >= 0.0 && L.overlap <= 1.0))
        throw invalid_parameter("maze layout: overlap must lie in [0,1]");
    if (!(L.t_fill > 0.0) || !(L.moat_frac > 0.0) || !(L.crack_frac > 0.0))
        throw invalid_parameter("maze layout: fractions must be positive");
}

bool strictly_inside(const Box3& c, const Box3& p) {
    return c.x0 > p.x0 && c.x1 < p.x1 && c.y0 > p.y0 && c.y1 < p.y1 && c.t0 > p.t0 &&
           c.t1 < p.t1;
}

bool disjoint(const Box3& a, const Box3& b) {
    return a.x1 < b.x0 || b.x1 < a.x0 || a.y1 < b.y0 || b.y1 < a.y0 || a.t1 < b.t0 ||
           b.t1 < a.t0;
}

} // namespace

std::vector<Box3> layout_children(const Box3& parent, const MazeLayout& L) {
    validate_layout_params(L);

    const double Lx = parent.x1 - parent.x0;
    const double Ly = parent.y1 - parent.y0;
    const double Lt = parent.t1 - parent.t0;
    const double side = std::min(Lx, Ly);
    const double moat = L.moat_frac * side;
    const double crack = L.crack_frac * side;

    // Rows are stacked along the longer planar axis and span the shorter one,
    // so the aspect ratio self-corrects every level.
    const bool stack_is_y = Ly >= Lx;
    const double stack_lo = (stack_is_y ? parent.y0 : parent.x0) + moat;
    const double stack_hi = (stack_is_y ? parent.y1 : parent.x1) - moat;
    const double span_lo = (stack_is_y ? parent.x0 : parent.y0) + moat;
    const double span_hi = (stack_is_y ? parent.x1 : parent.y1) - moat;

    const int tiers = L.tiers;
    const int rows = 24 / tiers;
    const double wstack = stack_hi - stack_lo;
    const double wspan = span_hi - span_lo;

    // Row boundaries sit at fractions (k + 1/3)/rows: the hairline cracks then
    // avoid the box center and step-aligned lattice columns, which would
    // otherwise thread the wall through a crack.
    auto row_lo = [&](int i) {
        return i == 0 ? stack_lo
                      : stack_lo + wstack * (i + 1.0 / 3.0) / rows;
    };
    auto row_hi = [&](int i) {
        return i == rows - 1 ? stack_hi
                             : stack_lo + wstack * (i + 1.0 + 1.0 / 3.0) / rows - crack;
    };

    const double pocket_frac = 0.5 * (1.0 - L.overlap);
    const double pocket_stack = pocket_frac * wstack;
    const double pocket_span = pocket_frac * wspan;

    const double slab_t = L.t_fill * Lt;

    std::vector<Box3> out;
    out.reserve(24);
    for (int k = 0; k < tiers; ++k) {
        const double tc = parent.t0 + Lt * static_cast<double>(k + 1) / (tiers + 1);
        const double tlo = tc - 0.5 * slab_t, thi = tc + 0.5 * slab_t;
        const bool high_corner = (k % 2 == 0); // pocket alternates opposite corners

        const double band_lo = high_corner ? stack_hi - pocket_stack : stack_lo;
        const double band_hi = high_corner ? stack_hi : stack_lo + pocket_stack;

        for (int i = 0; i < rows; ++i) {
            const double rlo = row_lo(i);
            const double rhi = row_hi(i);
            double slo = span_lo, shi = span_hi;
            if (rhi > band_lo && rlo < band_hi) { // row meets the pocket band
                if (high_corner)
                    shi = span_hi - pocket_span;
                else
                    slo = span_lo + pocket_span;
            }
            Box3 b;
            if (stack_is_y) {
                b = {slo, shi, rlo, rhi, tlo, thi};
            } else {
                b = {rlo, rhi, slo, shi, tlo, thi};
            }
            out.push_back(b);
        }
    }
    return out;
}

MazeTree build_maze(int n, int levels, const MazeLayout& layout) {
    if (n < 1) throw invalid_parameter("build_maze: n must be >= 1");
    if (levels < 0) throw invalid_parameter("build_maze: levels must be >= 0");
    validate_layout_params(layout);

    MazeTree tree;
    tree.n = n;
    tree.levels = levels;
    tree.layout = layout;
    tree.root = {-10.0 * n, 10.0 * n, -10.0 * n, 10.0 * n, -0.5, 0.5};
    tree.level_boxes.push_back({tree.root});

    for (int j = 0; j < levels; ++j) {
        const std::vector<Box3>& parents = tree.level_boxes.back();
        std::vector<Box3> next;
        next.reserve(parents.size() * 24);
        for (size_t pi = 0; pi < parents.size(); ++pi) {
            const Box3& parent = parents[pi];
            std::vector<Box3> kids = layout_children(parent, layout);
            for (size_t a = 0; a < kids.size(); ++a) {
                if (!strictly_inside(kids[a], parent))
                    throw invalid_layout("maze level " + std::to_string(j + 1) + ": child " +
                                         std::to_string(a) + " of parent " +
                                         std::to_string(pi) + " not strictly inside");
                for (size_t b = a + 1; b < kids.size(); ++b)
                    if (!disjoint(kids[a], kids[b]))
                        throw invalid_layout("maze level " + std::to_string(j + 1) +
                                             ": children " + std::to_string(a) + "," +
                                             std::to_string(b) + " of parent " +
                                             std::to_string(pi) + " intersect");
                tree.max_diameter_ratio =
                    std::max(tree.max_diameter_ratio, kids[a].diameter() / parent.diameter());
            }
            next.insert(next.end(), kids.begin(), kids.end());
        }
        tree.level_boxes.push_back(std::move(next));
    }
    return tree;
}

ObstacleSet maze_level_union(const MazeTree& tree, int level) {
    if (level < 0 || level > tree.levels)
        throw invalid_parameter("maze_level_union: level out of range");
    ObstacleSet out;
    out.boxes = tree.level_boxes[level];
    return out;
}

AssembledSet assemble_A(const std::vector<MazeTree>& trees) {
    AssembledSet out;
    out.components.reserve(trees.size());
    for (size_t i = 0; i < trees.size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        AssembledComponent comp;
        comp.n = n;
        comp.tree = trees[i];
        comp.center = {0.0, 0.0, 1.0 / n};
        comp.radius = 1.0 / (20.0 * static_cast<double>(n) * n);

        // cc-distance from the origin to any configuration point (box points
        // and the witnesses (0,0,+-1)) is at most the four-segment bound
        // 5(|x| + |y| + sqrt(|t|)); dilate so that bound lands inside r_n.
        const Box3& r = trees[i].root;
        const double reach =
            5.0 * (std::max(std::fabs(r.x0), std::fabs(r.x1)) +
                   std::max(std::fabs(r.y0), std::fabs(r.y1)) +
                   std::sqrt(std::max(std::fabs(r.t0), std::fabs(r.t1))));
        const double witness_reach = 5.0 * 1.0; // 5*(0+0+sqrt(1)) covers (0,0,+-1)
        comp.scale = comp.radius / std::max(reach, witness_reach);
        out.components.push_back(std::move(comp));
    }
    return out;
}

} // namespace heisgeo
